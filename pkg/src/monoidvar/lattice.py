"""Finite posets and lattices: inclusion order between varieties, lattice
operations, modular and distributive law checks, forbidden sublattices."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .deduction import DEFAULT_CAPS, Caps, isoterm_monoid, member, orbit
from .families import VarietyBasis, variety_basis
from .identities import Identity
from .monoids import (FiniteMonoid, factor_monoid, satisfies, satisfies_basis,
                      trivial_monoid)
from .verdict import Verdict, conjoin
from .words import EMPTY, Word


class PosetError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """Two routes gave opposite decisive answers to the same question."""


@dataclass(frozen=True)
class FinitePoset:
    elements: tuple
    leq: tuple  # leq[i][j]: elements[i] <= elements[j]

    def __post_init__(self):
        n = len(self.elements)
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "leq", tuple(tuple(bool(x) for x in row) for row in self.leq))
        L = self.leq
        if len(L) != n or any(len(r) != n for r in L):
            raise PosetError("relation matrix has the wrong shape")
        for i in range(n):
            if not L[i][i]:
                raise PosetError(f"not reflexive at {self.elements[i]}")
            for j in range(n):
                if i != j and L[i][j] and L[j][i]:
                    raise PosetError(f"not antisymmetric: {self.elements[i]}, {self.elements[j]}")
                if L[i][j]:
                    for k in range(n):
                        if L[j][k] and not L[i][k]:
                            raise PosetError("not transitive")

    @classmethod
    def from_covers(cls, elements, covers) -> "FinitePoset":
        """Reflexive-transitive closure of (lower, upper) label pairs."""
        elements = list(elements)
        ix = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        L = [[i == j for j in range(n)] for i in range(n)]
        for a, b in covers:
            L[ix[a]][ix[b]] = True
        for k in range(n):
            for i in range(n):
                if L[i][k]:
                    for j in range(n):
                        if L[k][j]:
                            L[i][j] = True
        return cls(tuple(elements), tuple(map(tuple, L)))

    def __len__(self):
        return len(self.elements)

    def index(self, label) -> int:
        return self.elements.index(label)

    def covers(self) -> list[tuple[int, int]]:
        n = len(self)
        L = self.leq
        out = []
        for i in range(n):
            for j in range(n):
                if i != j and L[i][j] and not any(
                        k not in (i, j) and L[i][k] and L[k][j] for k in range(n)):
                    out.append((i, j))
        return out

    def relabel(self, perm) -> "FinitePoset":
        """Poset with elements reordered as perm (a list of old indices)."""
        return FinitePoset(tuple(self.elements[p] for p in perm),
                           tuple(tuple(self.leq[p][q] for q in perm) for p in perm))

    def same_order(self, other: "FinitePoset") -> bool:
        """Equal as labeled orders, whatever the element sequence."""
        if set(self.elements) != set(other.elements):
            return False
        for a in self.elements:
            for b in self.elements:
                if self.leq[self.index(a)][self.index(b)] != other.leq[other.index(a)][other.index(b)]:
                    return False
        return True


# -- lattice operations -------------------------------------------------------

@dataclass(frozen=True)
class LatticeOps:
    is_lattice: bool
    meet: tuple | None = None
    join: tuple | None = None
    witness: tuple | None = None  # a pair without meet or join


def _bound(P: FinitePoset, i: int, j: int, lower: bool):
    n = len(P)
    L = P.leq
    if lower:
        cands = [k for k in range(n) if L[k][i] and L[k][j]]
        best = [k for k in cands if all(L[c][k] for c in cands)]
    else:
        cands = [k for k in range(n) if L[i][k] and L[j][k]]
        best = [k for k in cands if all(L[k][c] for c in cands)]
    return best[0] if best else None


def lattice_ops(P: FinitePoset) -> LatticeOps:
    n = len(P)
    if n == 0:
        return LatticeOps(False, witness=())
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = _bound(P, i, j, True)
            k = _bound(P, i, j, False)
            if m is None or k is None:
                return LatticeOps(False, witness=(P.elements[i], P.elements[j]))
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = k
    return LatticeOps(True, tuple(map(tuple, meet)), tuple(map(tuple, join)))


@dataclass(frozen=True)
class Sublattice:
    kind: str       # "N5" or "M3"
    elements: tuple  # N5: (0, a, b, c, 1) with a < b; M3: (0, a, b, c, 1)


@dataclass(frozen=True)
class LawReport:
    modular: bool
    distributive: bool
    witness: tuple | None = None  # a violating triple of labels
    sublattice: Sublattice | None = None


def _as_ops(P):
    ops = lattice_ops(P)
    if not ops.is_lattice:
        raise PosetError(f"not a lattice: {ops.witness} has no meet or join")
    return ops


def check_laws(P: FinitePoset) -> LawReport:
    ops = _as_ops(P)
    M, J = ops.meet, ops.join
    L = P.leq
    n = len(P)
    lab = P.elements
    mod_witness = None
    for a in range(n):
        for c in range(n):
            if not L[a][c]:
                continue
            for b in range(n):
                if J[a][M[b][c]] != M[J[a][b]][c]:
                    mod_witness = (lab[a], lab[b], lab[c])
                    break
            if mod_witness:
                break
        if mod_witness:
            break
    dist_witness = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M[a][J[b][c]] != J[M[a][b]][M[a][c]]:
                    dist_witness = (lab[a], lab[b], lab[c])
                    break
            if dist_witness:
                break
        if dist_witness:
            break
    sub = None
    if mod_witness or dist_witness:
        found = forbidden_sublattices(P, ops)
        kinds = [s for s in found if s.kind == "N5"] if mod_witness else found
        sub = kinds[0] if kinds else None
        if dist_witness and not mod_witness:
            m3 = [s for s in found if s.kind == "M3"]
            sub = m3[0] if m3 else sub
    return LawReport(mod_witness is None, dist_witness is None,
                     mod_witness or dist_witness, sub)


def forbidden_sublattices(P: FinitePoset, ops: LatticeOps | None = None) -> list[Sublattice]:
    """Every N5 and M3 sublattice, by scanning 5-element subsets."""
    ops = ops or _as_ops(P)
    M, J = ops.meet, ops.join
    L = P.leq
    lab = P.elements
    out = []
    for S in combinations(range(len(P)), 5):
        bot = [s for s in S if all(L[s][t] for t in S)]
        top = [s for s in S if all(L[t][s] for t in S)]
        if not bot or not top:
            continue
        o, i = bot[0], top[0]
        mid = [s for s in S if s not in (o, i)]
        chains = [(x, y) for x, y in permutations(mid, 2) if L[x][y]]
        if not chains:
            if all(M[x][y] == o and J[x][y] == i for x, y in combinations(mid, 2)):
                out.append(Sublattice("M3", (lab[o],) + tuple(lab[m] for m in mid) + (lab[i],)))
        elif len(chains) == 1:
            x, y = chains[0]
            (c,) = [m for m in mid if m not in (x, y)]
            if (M[x][c] == o and M[y][c] == o and J[x][c] == i and J[y][c] == i):
                out.append(Sublattice("N5", (lab[o], lab[x], lab[y], lab[c], lab[i])))
    return out


def n5() -> FinitePoset:
    return FinitePoset.from_covers("0abc1", [("0", "a"), ("a", "b"), ("b", "1"),
                                            ("0", "c"), ("c", "1")])


def m3() -> FinitePoset:
    return FinitePoset.from_covers("0abc1", [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])


def chain(n: int) -> FinitePoset:
    labels = [str(i) for i in range(n)]
    return FinitePoset.from_covers(labels, zip(labels, labels[1:]))


def all_small_lattices(max_size: int = 8):
    """Every lattice on at most max_size elements, up to repetition: an
    arbitrary naturally labeled poset with a new bottom and top added."""
    yield FinitePoset(("0",), ((True,),))
    for k in range(0, max_size - 1):
        pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
        for mask in range(1 << len(pairs)):
            R = [[i == j for j in range(k)] for i in range(k)]
            for b, (i, j) in enumerate(pairs):
                if mask >> b & 1:
                    R[i][j] = True
            if not all(not (R[i][j] and R[j][l]) or R[i][l]
                       for i in range(k) for j in range(k) for l in range(k)):
                continue
            n = k + 2
            L = [[False] * n for _ in range(n)]
            for i in range(n):
                L[0][i] = True
                L[i][n - 1] = True
            for i in range(k):
                for j in range(k):
                    L[i + 1][j + 1] = R[i][j]
            P = FinitePoset(tuple(["0"] + [f"e{i}" for i in range(k)] + ["1"]),
                            tuple(map(tuple, L)))
            if lattice_ops(P).is_lattice:
                yield P


# -- export -------------------------------------------------------------------

def to_dot(P: FinitePoset, name: str = "lattice") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, e in enumerate(P.elements):
        lines.append(f'  n{i} [label="{e}"];')
    for i, j in P.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(P: FinitePoset) -> str:
    """One line per element: '<label> < <upper cover>, ...'."""
    up = {i: [] for i in range(len(P))}
    for i, j in P.covers():
        up[i].append(P.elements[j])
    return "".join(f"{P.elements[i]} < {', '.join(up[i])}\n" if up[i] else f"{P.elements[i]}\n"
                   for i in range(len(P)))


# -- inclusion between varieties ------------------------------------------------

@dataclass(frozen=True)
class Descriptor:
    """A variety given by a generating monoid, an identity basis, or both."""

    label: str
    monoid: FiniteMonoid | None = None
    basis: VarietyBasis | None = None

    def __post_init__(self):
        if self.monoid is None and self.basis is None:
            raise ValueError("descriptor needs a monoid or a basis")


def _is_trivial(M: FiniteMonoid | None) -> bool:
    return M is not None and M.size == 1


def _countermodel(sigma: Identity, pool, basis) -> FiniteMonoid | None:
    for M in pool:
        if satisfies_basis(M, basis).is_holds and satisfies(M, sigma).is_fails:
            return M
    return None


def inclusion(d: Descriptor, e: Descriptor, caps: Caps = DEFAULT_CAPS, pool=()) -> Verdict:
    """Is the variety of d contained in that of e?  Every applicable route
    is run; opposite decisive answers raise ConsistencyError."""
    routes = []
    if _is_trivial(d.monoid):
        routes.append(("trivial", Verdict.holds()))
    if d.monoid is not None and e.basis is not None:
        routes.append(("satisfies", satisfies_basis(d.monoid, e.basis)))
    if d.monoid is not None and d.monoid.words is not None and e.monoid is not None:
        routes.append(("isoterm", member(d.monoid.words, e.monoid, caps)))
    if d.basis is not None and e.basis is not None:
        routes.append(("deduction", _basis_inclusion(d.basis, e.basis, caps, pool)))
    if d.monoid is None and e.monoid is not None and e.monoid.words is not None:
        # a factor monoid satisfying d's basis that falls outside e
        for M in pool:
            if M.words is not None and satisfies_basis(M, d.basis).is_holds \
                    and isoterm_fails(M, e.monoid, caps):
                routes.append(("countermodel", Verdict.fails(M, "satisfies the basis, "
                                                                "outside the variety")))
                break
    if not routes:
        return Verdict.unknown("no route applies")
    decisive = [(n, v) for n, v in routes if v.decisive]
    if len({v.outcome for _, v in decisive}) > 1:
        raise ConsistencyError(f"{d.label} <= {e.label}: " +
                               "; ".join(f"{n}: {v}" for n, v in decisive))
    return decisive[0][1] if decisive else routes[0][1]


def isoterm_fails(M: FiniteMonoid, N: FiniteMonoid, caps: Caps) -> bool:
    return any(isoterm_monoid(w, N, caps).is_fails for w in M.words)


def _basis_inclusion(B: VarietyBasis, C: VarietyBasis, caps: Caps, pool) -> Verdict:
    """var B inside var C: derive each identity of C from B, or find a
    monoid of var B violating one."""
    pending = []
    for sigma in C.instantiate():
        if sigma.rhs in orbit(sigma.lhs, B, caps):
            continue
        M = _countermodel(sigma, pool, B)
        if M is not None:
            return Verdict.fails(sigma, f"not derivable; {M!r} satisfies {B.name} but not it")
        pending.append(sigma)
    if pending:
        return Verdict.unknown(f"{pending[0]} neither derived nor refuted")
    if C.truncated:
        return Verdict.unknown(f"{C.name} instantiated only to weight {C.bound}")
    return Verdict.holds()


@dataclass
class PosetResult:
    poset: FinitePoset | None
    verdicts: list = field(default_factory=list)  # verdicts[i][j] for i <= j
    unknown: list = field(default_factory=list)   # (label, label, reason)


def build_poset(descriptors, caps: Caps = DEFAULT_CAPS, jobs: int = 1) -> PosetResult:
    """Inclusion order between the descriptors' varieties.  Unknown pairs
    are reported and left out of the order, never guessed."""
    descriptors = list(descriptors)
    n = len(descriptors)
    pool = [trivial_monoid(), factor_monoid([EMPTY])] + \
        [d.monoid for d in descriptors if d.monoid is not None]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]

    def run(p):
        i, j = p
        return inclusion(descriptors[i], descriptors[j], caps, pool)

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            results = list(ex.map(run, pairs))
    else:
        results = [run(p) for p in pairs]
    V = [[Verdict.holds() if i == j else None for j in range(n)] for i in range(n)]
    for (i, j), v in zip(pairs, results):
        V[i][j] = v
    unknown = [(descriptors[i].label, descriptors[j].label, V[i][j].reason)
               for i, j in pairs if V[i][j].is_unknown]
    leq = [[V[i][j].is_holds for j in range(n)] for i in range(n)]
    labels = tuple(d.label for d in descriptors)
    try:
        P = FinitePoset(labels, tuple(map(tuple, leq)))
    except PosetError as exc:
        if unknown:
            return PosetResult(None, V, unknown)
        raise ConsistencyError(str(exc)) from exc
    return PosetResult(P, V, unknown)


# -- the lattice of subvarieties of M(x^2 y, y x^2) ------------------------------

def _fm(*ws):
    return factor_monoid([Word.parse(w) for w in ws])


def fig1_descriptors() -> list[Descriptor]:
    return [
        Descriptor("T", trivial_monoid(), variety_basis("T")),
        Descriptor("SL", factor_monoid([EMPTY]), variety_basis("SL")),
        Descriptor("M(x)", _fm("x")),
        Descriptor("M(x^2)", _fm("x^2")),
        Descriptor("M(xy)", _fm("x y")),
        Descriptor("M(xyx)", _fm("x y x")),
        Descriptor("M(xy,x^2)", _fm("x y", "x^2")),
        Descriptor("M(xyx,x^2)", _fm("x y x", "x^2")),
        Descriptor("M(x^2y)", _fm("x^2 y")),
        Descriptor("M(yx^2)", _fm("y x^2")),
        Descriptor("M(x^2y,yx^2)", _fm("x^2 y", "y x^2")),
    ]


FIG1_COVERS = [
    ("T", "SL"), ("SL", "M(x)"), ("M(x)", "M(xy)"), ("M(x)", "M(x^2)"),
    ("M(xy)", "M(xyx)"), ("M(xy)", "M(xy,x^2)"), ("M(x^2)", "M(xy,x^2)"),
    ("M(xyx)", "M(xyx,x^2)"), ("M(xy,x^2)", "M(xyx,x^2)"),
    ("M(xy,x^2)", "M(x^2y)"), ("M(xy,x^2)", "M(yx^2)"),
    ("M(xyx,x^2)", "M(x^2y,yx^2)"), ("M(x^2y)", "M(x^2y,yx^2)"),
    ("M(yx^2)", "M(x^2y,yx^2)"),
]


def fig1_expected() -> FinitePoset:
    return FinitePoset.from_covers([d.label for d in fig1_descriptors()], FIG1_COVERS)


@dataclass
class Fig1Report:
    computed: PosetResult
    expected: FinitePoset
    mismatches: list      # (a, b, expected <=, computed verdict)
    laws: LawReport

    @property
    def ok(self) -> bool:
        return (not self.mismatches and self.laws.modular and not self.laws.distributive
                and self.laws.sublattice is not None and self.laws.sublattice.kind == "M3")


def fig1_report(caps: Caps = DEFAULT_CAPS, jobs: int = 1) -> Fig1Report:
    res = build_poset(fig1_descriptors(), caps, jobs)
    exp = fig1_expected()
    labels = exp.elements
    mism = []
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            v = res.verdicts[i][j]
            if v.decisive and v.is_holds != exp.leq[i][j]:
                mism.append((a, b, exp.leq[i][j], v))
    return Fig1Report(res, exp, mism, check_laws(exp))
