"""Decide M(W) in var B through isoterms and through satisfaction, for the
fixed word sets and bases, and report any disagreement."""

import argparse

from monoidvar.deduction import Caps
from monoidvar.experiments import consistency_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=None)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()

    rep = consistency_suite(caps=Caps(max_word_length=args.max_len))
    for r in rep.rows:
        if args.verbose or r.contradiction:
            flag = "  CONTRADICTION" if r.contradiction else ""
            print(f"{' ; '.join(r.words):28} {r.basis:9} {r.via_isoterms:8} "
                  f"{r.via_satisfaction:8}{flag}")
    print(f"{len(rep.rows)} rows, {len(rep.contradictions)} contradictions, "
          f"{rep.seconds:.1f}s")
    raise SystemExit(1 if rep.contradictions else 0)


if __name__ == "__main__":
    main()
