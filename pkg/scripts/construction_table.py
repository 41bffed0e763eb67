"""Tabulate the HBBL/VBBL constructions and the closed-form counts for odd grids.

    python scripts/construction_table.py --max 45 --limit 405
"""

from __future__ import annotations

import argparse

from facemagic.construct import build, constructed_sequences, tau
from facemagic.formulas import count_value_mid, lower_bound_total, lower_bound_value_plus
from facemagic.labeling import is_standard, verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=27, help="largest side length")
    ap.add_argument("--limit", type=int, default=243, help="largest mn for which labelings are built")
    args = ap.parse_args()

    print(f"{'m':>3} {'n':>3} {'tau':>4} {'tau^T':>5} {'built':>5} {'distinct':>8} "
          f"{'mid':>12} {'plus>=':>10} {'total>=':>12}")
    for m in range(3, args.max + 1, 2):
        for n in range(m, args.max + 1, 2):
            built = distinct = "-"
            if m * n <= args.limit:
                labs = [build(F) for F in constructed_sequences(m, n)]
                assert all(is_standard(L) and verify(L).S == 2 * m * n + 3 for L in labs)
                built, distinct = len(labs), len({L.labels for L in labs})
            print(f"{m:>3} {n:>3} {tau(m, n):>4} {tau(n, m):>5} {built:>5} {distinct:>8} "
                  f"{count_value_mid(m, n):>12} {lower_bound_value_plus(m, n):>10} "
                  f"{lower_bound_total(m, n):>12}")


if __name__ == "__main__":
    main()
