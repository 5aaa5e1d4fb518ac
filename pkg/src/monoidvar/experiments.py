"""Fixed experiment definitions shared by scripts/ and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .deduction import DEFAULT_CAPS, Caps, member
from .families import all_perms, c_word, pi_tau_perms, v_xieta_word, variety_basis
from .identities import Identity
from .monoids import factor_monoid, satisfies, satisfies_basis
from .words import Word

WORD_SETS = [
    ["x"], ["x y"], ["x^2"], ["x y x"], ["x^2 y"], ["y x^2"], ["x y", "x^2"],
    ["x y x", "x^2"], ["x^2 y", "y x^2"], ["x y z"], ["x y x y"], ["x z x y t y"],
    ["x y s x z y t z"], ["x z y t x y"], ["x z x y t y", "x^2"], ["x y z x y"],
    ["x^3"], ["x y x z x"], ["z1 t1 x z1 x"], ["x y t x z1 y t1 z1"],
]

CONSISTENCY_BASES = ["A", "N", "Q2", "R2", "Aprime@2"]


def consistency_basis(spec: str):
    name, _, bound = spec.partition("@")
    n = 2 if name in ("Q2", "R2") else 1
    return variety_basis(name.rstrip("0123456789"), n, int(bound) if bound else 3)


@dataclass
class ConsistencyRow:
    words: list
    basis: str
    via_isoterms: str
    via_satisfaction: str

    @property
    def contradiction(self) -> bool:
        a, b = self.via_isoterms, self.via_satisfaction
        return {a, b} == {"holds", "fails"}


@dataclass
class ConsistencyReport:
    rows: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def contradictions(self):
        return [r for r in self.rows if r.contradiction]


def consistency_suite(word_sets=WORD_SETS, bases=CONSISTENCY_BASES,
                      caps: Caps = DEFAULT_CAPS) -> ConsistencyReport:
    """M(W) in var B decided two ways: each word of W an isoterm for B, and
    M(W) satisfying every identity of B."""
    t0 = time.perf_counter()
    rep = ConsistencyReport()
    for spec in bases:
        B = consistency_basis(spec)
        for ws in word_sets:
            W = [Word.parse(w) for w in ws]
            a = member(W, B, caps)
            b = satisfies_basis(factor_monoid(W), B)
            rep.rows.append(ConsistencyRow(ws, spec, a.outcome.value, b.outcome.value))
    rep.seconds = time.perf_counter() - t0
    return rep


@dataclass
class VxeReport:
    words: dict
    verdicts: dict
    seconds: float

    @property
    def all_hold(self) -> bool:
        return all(v.is_holds for v in self.verdicts.values())


def vxe_class_check(n: int = 0, m: int = 0, strategy: str = "factor_matching") -> VxeReport:
    """Every pair v(xi1,eta1) = v(xi2,eta2), xi, eta in S_2, against
    M(c_{n,m,k+2}[tau]) with k = n+m+1."""
    t0 = time.perf_counter()
    k = n + m + 1
    _, tau = pi_tau_perms(n, m)
    M = factor_monoid([c_word(n, m, k + 2, tau)])
    S2 = all_perms(2)
    words = {(xi, eta): v_xieta_word(n, m, xi, eta) for xi in S2 for eta in S2}
    keys = list(words)
    verdicts = {}
    for i, p in enumerate(keys):
        for q in keys[i + 1:]:
            verdicts[(p, q)] = satisfies(M, Identity(words[p], words[q]), strategy)
    return VxeReport(words, verdicts, time.perf_counter() - t0)
