"""Enumerate every face-magic labeling of small projective grids and tabulate counts.

Prints one line per (grid, value) with raw and up-to-symmetry counts next to
the closed-form predictions, and optionally writes the full JSON reports.

    python scripts/enumerate_small_grids.py --grids 3x3 3x5 4x4 5x5 --json out.json
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from facemagic.formulas import count_value_mid, lower_bound_value_plus
from facemagic.grid import Dims
from facemagic.search import SearchConfig, default_workers, enumerate_all


def parse_grid(text: str) -> Dims:
    m, n = text.lower().split("x")
    return Dims(int(m), int(n))


def predicted(dims: Dims, S: int) -> str:
    if not dims.odd or dims.m < 3 or dims.n < 3:
        return ""
    N = dims.size
    if S == 2 * N + 2:
        return f"formula {count_value_mid(dims.m, dims.n)}"
    return f"bound >= {lower_bound_value_plus(dims.m, dims.n)}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grids", nargs="+", default=["3x3", "3x5", "4x4"])
    ap.add_argument("--pruning", choices=("pure", "lemma"), default="lemma")
    ap.add_argument("--workers", type=int, default=default_workers())
    ap.add_argument("--max-nodes", type=int, default=0)
    ap.add_argument("--json", type=Path)
    args = ap.parse_args()

    reports = []
    for text in args.grids:
        dims = parse_grid(text)
        pruning = args.pruning if (dims.odd or dims.even) else "pure"
        r = enumerate_all(SearchConfig(dims, pruning=pruning, worker_count=args.workers,
                                       max_nodes=args.max_nodes))
        status = "" if r.complete else "  INCOMPLETE"
        print(f"P{dims.m},{dims.n}: {r.total_raw} raw, {r.total_up_to_symmetry} up to symmetry, "
              f"{r.nodes} nodes, {r.wall_time:.2f}s{status}")
        for S, c in sorted(r.counts.items()):
            print(f"  S={S:<4} raw {c.raw:<6} classes {c.up_to_symmetry:<5} {predicted(dims, S)}")
        reports.append({**r.summary(), "pruning": pruning, "nodes": r.nodes, "wall_time_s": r.wall_time})
    if args.json:
        args.json.write_text(json.dumps(reports, indent=2))


if __name__ == "__main__":
    main()
