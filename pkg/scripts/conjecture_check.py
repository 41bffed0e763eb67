"""Compare the standard forms of all enumerated S = 2mn+3 labelings with the HBBL/VBBL constructions.

    python scripts/conjecture_check.py 3x3 3x5 5x3 5x5
"""

from __future__ import annotations

import argparse

from facemagic.grid import Dims
from facemagic.labeling import Labeling
from facemagic.search import bicentral_equivalence_census, conjecture_check, default_workers


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("grids", nargs="*", default=["3x3", "3x5", "5x5"])
    ap.add_argument("--workers", type=int, default=default_workers())
    ap.add_argument("--census", action="store_true", help="also report equivalence-class sizes")
    args = ap.parse_args()

    for text in args.grids:
        m, n = (int(x) for x in text.lower().split("x"))
        rep = conjecture_check(m, n, workers=args.workers)
        print(f"P{m},{n}: {rep.verdict}; {len(rep.enumerated)} standard labelings enumerated, "
              f"{len(rep.constructed)} constructed")
        for labels, sources in sorted(rep.constructed.items()):
            print(f"  {', '.join(sources)}")
        for w in rep.only_enumerated:
            print("  not constructed:")
            print("    " + str(Labeling(Dims(m, n), w)).replace("\n", "\n    "))
        if args.census and rep.verdict != "inconclusive":
            standards = [Labeling(Dims(m, n), lab) for lab in rep.enumerated]
            for e in bicentral_equivalence_census(m, n, standards).values():
                print(f"  class size {e.class_size} (expected {e.expected_class_size}), "
                      f"{e.orbits_klein} orbits under R0/R180/H/V, {e.orbits_full} under the full group")


if __name__ == "__main__":
    main()
