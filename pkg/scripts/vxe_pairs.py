"""Check that M(c_{n,m,k+2}[tau]) satisfies v(xi1,eta1) = v(xi2,eta2) for all
xi, eta in S_2 (k = n+m+1)."""

import argparse

from monoidvar.experiments import vxe_class_check
from monoidvar.monoids import STRATEGIES


def fmt(pair):
    return "(" + "; ".join(",".join(map(str, p.images)) for p in pair) + ")"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=0)
    ap.add_argument("-m", type=int, default=0)
    ap.add_argument("--strategy", choices=STRATEGIES, default="factor_matching")
    args = ap.parse_args()

    rep = vxe_class_check(args.n, args.m, args.strategy)
    for (xi, eta), w in rep.words.items():
        print(f"v{fmt((xi, eta))} = {w}")
    for (p, q), v in rep.verdicts.items():
        print(f"{fmt(p)} vs {fmt(q)}: {v.outcome.value}")
    print(f"{'all hold' if rep.all_hold else 'NOT all hold'} ({rep.seconds:.1f}s)")
    raise SystemExit(0 if rep.all_hold else 1)


if __name__ == "__main__":
    main()
