"""Claims manifests: one checkable assertion per line,

    <kind> <subject> :: <object> ; expect <expectation> [# note]

run in parallel and reported in file order.
"""

from __future__ import annotations

import shlex
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .deduction import Caps, isoterm_basis, isoterm_monoid, member, orbit
from .lattice import chain, check_laws, fig1_report, m3, n5
from .monoids import FiniteMonoid, find_isomorphism, satisfies, satisfies_basis
from .syntax import (ParseError, parse_basis, parse_identity, parse_monoid,
                     parse_word, split_top)
from .verdict import Verdict

KINDS = ("check", "isoterm", "member", "orbit_closed", "lattice_law", "isomorphic")


@dataclass(frozen=True)
class Claim:
    kind: str
    subject: str
    object: str
    expect: str
    note: str = ""
    line: int = 0

    def __str__(self):
        out = f"{self.kind} {self.subject} :: {self.object} ; expect {self.expect}"
        return out + (f"  # {self.note}" if self.note else "")


def parse_claim(text: str, line: int = 0) -> Claim | None:
    body, _, note = text.partition("#")
    body = body.strip()
    if not body:
        return None
    head, sep, expect = body.rpartition("; expect ")
    if not sep:
        head, sep, expect = body.rpartition(";expect ")
    if not sep:
        raise ParseError(f"line {line}: missing '; expect <expectation>'")
    kind, _, rest = head.strip().partition(" ")
    if kind not in KINDS:
        raise ParseError(f"line {line}: unknown claim kind {kind!r}")
    subject, sep, obj = rest.partition("::")
    if not sep:
        raise ParseError(f"line {line}: missing '::'")
    return Claim(kind, subject.strip(), obj.strip(), expect.strip(), note.strip(), line)


def parse_manifest(text: str) -> list[Claim]:
    out = []
    for i, ln in enumerate(text.splitlines(), 1):
        c = parse_claim(ln, i)
        if c is not None:
            out.append(c)
    return out


@dataclass(frozen=True)
class Options:
    caps: Caps = Caps()
    strategy: str = "auto"
    bound: int = 3


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    status: str        # PASS | FAIL | UNKNOWN | ERROR
    detail: str
    replay: str

    def to_json(self) -> dict:
        return {"line": self.claim.line, "kind": self.claim.kind, "status": self.status,
                "detail": self.detail, "replay": self.replay, "note": self.claim.note}


def _flags(opts: Options) -> str:
    out = []
    c = opts.caps
    if c.max_word_length is not None:
        out.append(f"--max-len {c.max_word_length}")
    if c.max_orbit_size != Caps().max_orbit_size:
        out.append(f"--max-orbit {c.max_orbit_size}")
    if opts.strategy != "auto":
        out.append(f"--strategy {opts.strategy}")
    if opts.bound != 3:
        out.append(f"--bound {opts.bound}")
    return (" " + " ".join(out)) if out else ""


def _grade(v: Verdict, yes: str, no: str, expect: str) -> tuple[str, str]:
    if v.is_unknown:
        return "UNKNOWN", str(v)
    got = yes if v.is_holds else no
    return ("PASS" if got == expect else "FAIL"), str(v)


def _variety(text: str, opts: Options):
    t = text.strip()
    if t.startswith("basis"):
        t = t[5:].strip()
    if t.startswith(("M(", "trivial", "rev:", "file:", "free(")):
        return parse_monoid(t)
    return parse_basis(t, opts.bound)


def _lattice(name: str):
    if name == "fig1":
        return fig1_report().expected
    if name == "N5":
        return n5()
    if name == "M3":
        return m3()
    if name.startswith("chain(") and name.endswith(")"):
        return chain(int(name[6:-1]))
    raise ParseError(f"unknown lattice {name!r}")


def evaluate(claim: Claim, opts: Options = Options()) -> ClaimResult:
    q = shlex.quote
    fl = _flags(opts)
    k, s, o, e = claim.kind, claim.subject, claim.object, claim.expect
    try:
        if k == "check":
            replay = f"monoidvar check {q(s)} {q(o)}{fl}"
            M = parse_monoid(s)
            if o == "size":
                return ClaimResult(claim, "PASS" if str(M.size) == e else "FAIL",
                                   f"size {M.size}", f"monoidvar check --table {q(s)} 'x = x'")
            if "=" in o and not o.startswith(("basis", "{")):
                v = satisfies(M, parse_identity(o), opts.strategy)
            else:
                v = satisfies_basis(M, _variety(o, opts), opts.strategy)
            status, detail = _grade(v, "holds", "fails", e)
        elif k == "isoterm":
            V = _variety(o, opts)
            w = parse_word(s)
            if isinstance(V, FiniteMonoid):
                replay = f"monoidvar isoterm {q(s)} --monoid {q(o)}{fl}"
                v = isoterm_monoid(w, V, opts.caps, opts.strategy)
            else:
                replay = f"monoidvar isoterm {q(s)} --basis {q(o)}{fl}"
                v = isoterm_basis(w, V, opts.caps)
            status, detail = _grade(v, "yes", "no", e)
        elif k == "member":
            replay = f"monoidvar member {q(s)} --in {q(o)}{fl}"
            M = parse_monoid(s)
            if M.words is None:
                raise ParseError("member needs a factor monoid M(...) as subject")
            v = member(M.words, _variety(o, opts), opts.caps)
            status, detail = _grade(v, "yes", "no", e)
        elif k == "orbit_closed":
            replay = f"monoidvar orbit {q(s)} --basis {q(o)}{fl}"
            res = orbit(parse_word(s), _variety(o, opts), opts.caps)
            status, detail = _grade_orbit(res, e)
        elif k == "lattice_law":
            replay = f"monoidvar lattice --law {q(s)}"
            status, detail = _grade_lattice(s, o, e)
        else:  # isomorphic
            replay = f"monoidvar check --iso {q(s)} {q(o)}"
            f = find_isomorphism(parse_monoid(s), parse_monoid(o))
            got = "yes" if f is not None else "no"
            status, detail = ("PASS" if got == e else "FAIL"), f"isomorphic: {got}"
    except Exception as exc:  # reported per claim, never fatal for the run
        return ClaimResult(claim, "ERROR", f"{type(exc).__name__}: {exc}", "")
    return ClaimResult(claim, status, detail, replay)


def _grade_orbit(res, expect: str) -> tuple[str, str]:
    """Expectation: comma list of closed | open | size=N | contains <w> | excludes <w>."""
    detail = f"{len(res)} words, {'closed' if res.closed else 'not closed'}: " + \
        "; ".join(map(str, res.sorted()[:8])) + (" ..." if len(res) > 8 else "")
    status = "PASS"
    for part in split_top(expect, ","):
        if part == "closed":
            ok = res.closed
        elif part == "open":
            ok = not res.closed
        elif part.startswith("size="):
            if not res.closed:
                status = "UNKNOWN" if status == "PASS" else status
                continue
            ok = len(res) == int(part[5:])
        elif part.startswith("contains "):
            ok = parse_word(part[9:]) in res
        elif part.startswith("excludes "):
            if parse_word(part[9:]) in res:
                ok = False
            elif not res.closed:
                status = "UNKNOWN" if status == "PASS" else status
                continue
            else:
                ok = True
        else:
            raise ParseError(f"unknown orbit expectation {part!r}")
        if not ok:
            status = "FAIL"
    return status, detail


def _grade_lattice(subject: str, obj: str, expect: str) -> tuple[str, str]:
    if subject == "fig1" and obj == "order":
        rep = fig1_report()
        un = rep.computed.unknown
        detail = f"{len(rep.mismatches)} mismatches, {len(un)} unknown pairs"
        if rep.mismatches:
            detail += f"; first: {rep.mismatches[0]}"
            return "FAIL", detail
        if expect != "matches":
            raise ParseError("order claims expect 'matches'")
        return ("UNKNOWN" if un else "PASS"), detail
    P = _lattice(subject)
    r = check_laws(P)
    facts = {"modular": r.modular, "not_modular": not r.modular,
             "distributive": r.distributive, "not_distributive": not r.distributive,
             "m3_witness": r.sublattice is not None and r.sublattice.kind == "M3",
             "n5_witness": r.sublattice is not None and r.sublattice.kind == "N5"}
    detail = f"modular={r.modular} distributive={r.distributive} witness={r.witness}"
    if r.sublattice:
        detail += f" {r.sublattice.kind}={r.sublattice.elements}"
    for part in split_top(expect, ","):
        if part not in facts:
            raise ParseError(f"unknown law expectation {part!r}")
        if not facts[part]:
            return "FAIL", detail
    return "PASS", detail


def _run_one(args):
    claim, opts = args
    return evaluate(claim, opts)


def run_manifest(text: str, opts: Options = Options(), jobs: int = 1) -> list[ClaimResult]:
    claims = parse_manifest(text)
    if jobs > 1 and len(claims) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_run_one, [(c, opts) for c in claims]))
    return [evaluate(c, opts) for c in claims]


def exit_code(results, strict: bool = False) -> int:
    if any(r.status in ("FAIL", "ERROR") for r in results):
        return 1
    if strict and any(r.status == "UNKNOWN" for r in results):
        return 2
    return 0
