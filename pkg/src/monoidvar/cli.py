"""monoidvar command line.

Exit codes for check, orbit, isoterm and member: 0 holds, 1 fails,
2 unknown (a cap was hit).  verify exits 1 on any FAIL.
"""

from __future__ import annotations

import argparse
import json
import sys

from .deduction import Caps, isoterm_basis, isoterm_monoid, member, orbit
from .families import Perm, enum_nm_perms
from .lattice import check_laws, fig1_report, to_dot, to_text
from .manifest import Options, exit_code, run_manifest
from .monoids import STRATEGIES, FiniteMonoid, find_isomorphism, satisfies, satisfies_basis
from .syntax import (ParseError, parse_basis, parse_identity, parse_monoid,
                     parse_word)
from .verdict import Verdict

SUPPRESS = argparse.SUPPRESS


def _global_flags(p: argparse.ArgumentParser, top: bool):
    d = (lambda v: v) if top else (lambda v: SUPPRESS)
    p.add_argument("--max-len", type=int, default=d(None), help="longest word kept in orbits")
    p.add_argument("--max-orbit", type=int, default=d(1_000_000), help="largest orbit explored")
    p.add_argument("--max-cand", type=int, default=d(None),
                   help="longest candidate word in isoterm sweeps")
    p.add_argument("--bound", type=int, default=d(3), help="weight bound for basis schemas")
    p.add_argument("--strategy", choices=STRATEGIES, default=d("auto"))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--format", choices=("text", "json-lines"), default=d("text"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monoidvar", description=__doc__.split("\n")[0])
    _global_flags(ap, True)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, False)
        return p

    p = cmd("gen", "print family words, (n,m)-permutations or basis instances")
    p.add_argument("what", choices=("word", "perms", "basis"))
    p.add_argument("args", nargs="+")

    p = cmd("check", "does a monoid satisfy an identity or basis")
    p.add_argument("monoid")
    p.add_argument("target", help="identity 'u = v', a basis, or a monoid with --iso")
    p.add_argument("--iso", action="store_true", help="test isomorphism of two monoids")
    p.add_argument("--table", action="store_true", help="print the monoid table first")

    p = cmd("orbit", "words reachable by deduction")
    p.add_argument("word")
    p.add_argument("--basis", required=True)

    p = cmd("isoterm", "is a word an isoterm")
    p.add_argument("word")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--basis")
    g.add_argument("--monoid")

    p = cmd("member", "does M(W) lie in a variety")
    p.add_argument("monoid")
    p.add_argument("--in", dest="target", required=True)

    p = cmd("lattice", "subvariety lattice of M(x^2 y, y x^2) and law checks")
    p.add_argument("--fig1", action="store_true")
    p.add_argument("--law", help="fig1, N5, M3 or chain(n)")
    p.add_argument("--dot", action="store_true")

    p = cmd("verify", "run a claims manifest")
    p.add_argument("manifest")
    p.add_argument("--strict", action="store_true", help="UNKNOWN counts as failure")
    return ap


def _caps(a) -> Caps:
    return Caps(a.max_len, a.max_orbit, a.max_cand)


def _emit(a, payload: dict, text: str):
    if a.format == "json-lines":
        print(json.dumps(payload))
    else:
        print(text)


def _verdict_out(a, v: Verdict, **extra) -> int:
    payload = {"outcome": v.outcome.value,
               "witness": None if v.witness is None else str(v.witness),
               "reason": v.reason, **extra}
    _emit(a, payload, str(v))
    return v.exit_code


def _variety(text: str, bound: int):
    t = text.strip()
    if t.startswith(("M(", "trivial", "rev:", "file:", "free(")):
        return parse_monoid(t)
    return parse_basis(t, bound)


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    try:
        return _dispatch(a)
    except (ParseError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _dispatch(a) -> int:
    caps = _caps(a)
    if a.cmd == "gen":
        if a.what == "word":
            for spec in a.args:
                w = parse_word(spec)
                _emit(a, {"spec": spec, "word": str(w), "length": len(w)}, str(w))
        elif a.what == "perms":
            n, m = map(int, a.args[:2])
            for rho in enum_nm_perms(n, m):
                _emit(a, {"perm": list(rho.images)}, str(rho))
        else:
            B = parse_basis(" ".join(a.args), a.bound)
            for s in B.instantiate():
                _emit(a, {"identity": str(s)}, str(s))
        return 0

    if a.cmd == "check":
        M = parse_monoid(a.monoid)
        if a.table:
            print(M.to_text(), end="")
        if a.iso:
            f = find_isomorphism(M, parse_monoid(a.target))
            mapping = None if f is None else {M.labels[x]: y for x, y in sorted(f.items())}
            _emit(a, {"isomorphic": f is not None, "map": mapping},
                  "isomorphic" if f is not None else "not isomorphic")
            return 0 if f is not None else 1
        t = a.target.strip()
        if "=" in t and not t.startswith(("basis", "{")):
            v = satisfies(M, parse_identity(t), a.strategy)
        else:
            v = satisfies_basis(M, parse_basis(t, a.bound), a.strategy)
        return _verdict_out(a, v)

    if a.cmd == "orbit":
        res = orbit(parse_word(a.word), parse_basis(a.basis, a.bound), caps)
        words = [str(w) for w in res.sorted()]
        _emit(a, {"closed": res.closed, "size": len(words), "words": words},
              "\n".join(words) + f"\n# {len(words)} words, {'closed' if res.closed else 'NOT closed'}")
        return 0 if res.closed else 2

    if a.cmd == "isoterm":
        w = parse_word(a.word)
        if a.basis:
            v = isoterm_basis(w, parse_basis(a.basis, a.bound), caps)
        else:
            v = isoterm_monoid(w, parse_monoid(a.monoid), caps, a.strategy)
        return _verdict_out(a, v)

    if a.cmd == "member":
        M = parse_monoid(a.monoid)
        if M.words is None:
            raise ParseError("member needs a factor monoid literal M(...)")
        return _verdict_out(a, member(M.words, _variety(a.target, a.bound), caps))

    if a.cmd == "lattice":
        return _lattice(a, caps)

    if a.cmd == "verify":
        with open(a.manifest) as fh:
            text = fh.read()
        opts = Options(caps, a.strategy, a.bound)
        results = run_manifest(text, opts, a.jobs)
        for r in results:
            if a.format == "json-lines":
                print(json.dumps(r.to_json()))
                continue
            line = f"{r.status:7} line {r.claim.line}: {r.claim.kind} {r.claim.subject} :: {r.claim.object}"
            print(line)
            if r.status != "PASS" or r.claim.note:
                print(f"        {r.detail}")
            if r.replay:
                print(f"        replay: {r.replay}")
        n = {s: sum(r.status == s for r in results) for s in ("PASS", "FAIL", "UNKNOWN", "ERROR")}
        if a.format == "text":
            print(" ".join(f"{k}={v}" for k, v in n.items()))
        return exit_code(results, a.strict)
    raise AssertionError(a.cmd)


def _lattice(a, caps) -> int:
    if a.law:
        from .manifest import _lattice as named
        P = named(a.law)
        r = check_laws(P)
        sub = None if r.sublattice is None else [r.sublattice.kind, list(r.sublattice.elements)]
        _emit(a, {"modular": r.modular, "distributive": r.distributive,
                  "witness": r.witness, "sublattice": sub},
              f"modular: {r.modular}\ndistributive: {r.distributive}\n"
              f"witness: {r.witness}\nsublattice: {sub}")
        return 0
    if not a.fig1:
        raise ParseError("lattice needs --fig1 or --law")
    rep = fig1_report(caps, a.jobs)
    P = rep.computed.poset
    if a.dot:
        print(to_dot(P if P is not None else rep.expected, "fig1"), end="")
        return 0 if rep.ok else 1
    if a.format == "json-lines":
        print(json.dumps({
            "mismatches": [[x, y, e, str(v)] for x, y, e, v in rep.mismatches],
            "unknown": rep.computed.unknown,
            "modular": rep.laws.modular, "distributive": rep.laws.distributive,
            "sublattice": None if rep.laws.sublattice is None
            else [rep.laws.sublattice.kind, list(rep.laws.sublattice.elements)],
            "ok": rep.ok}))
    else:
        print("computed order (upper covers):")
        print(to_text(P) if P is not None else "  (not a poset: unknown pairs)")
        print(f"mismatches with the figure: {len(rep.mismatches)}")
        for x, y, e, v in rep.mismatches:
            print(f"  {x} <= {y}: figure says {e}, computed {v}")
        print(f"unknown pairs: {len(rep.computed.unknown)}")
        for x, y, why in rep.computed.unknown:
            print(f"  {x} <= {y}: {why}")
        print(f"modular: {rep.laws.modular}  distributive: {rep.laws.distributive}")
        if rep.laws.sublattice:
            print(f"{rep.laws.sublattice.kind} sublattice: {', '.join(rep.laws.sublattice.elements)}")
        print("OK" if rep.ok else "MISMATCH")
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
