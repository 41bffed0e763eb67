"""Exhaustive enumeration of C4-face-magic labelings on small projective grids.

The free cells are row 1 and column 1 (m + n - 1 cells); every other cell is
forced by an interior face equation.  Wrap faces (and, in lemma-assisted mode,
digon sums) are checked as soon as their cells are all known.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from facemagic import _kernel
from facemagic.construct import build, constructed_sequences
from facemagic.grid import Dims, Symmetry, c4_faces, symmetry_permutation
from facemagic.labeling import Labeling, canonical_labels, is_standard, lemma_digon_case
from facemagic.transform import equivalence_class, standardize

Pruning = Literal["pure", "lemma"]

DEFAULT_MAX_NODES = 0  # unlimited


@dataclass(frozen=True)
class SearchConfig:
    dims: Dims
    value_filter: int | None = None
    up_to_symmetry: bool = True
    pruning: Pruning = "lemma"
    worker_count: int = 1
    max_nodes: int = DEFAULT_MAX_NODES
    split_depth: int = 2

    def __post_init__(self) -> None:
        if self.pruning not in ("pure", "lemma"):
            raise ValueError(f"pruning must be 'pure' or 'lemma', got {self.pruning!r}")
        if self.pruning == "lemma" and not (self.dims.odd or self.dims.even):
            raise ValueError("lemma-assisted pruning needs m and n of equal parity")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")


@dataclass
class ValueCount:
    S: int
    raw: int
    up_to_symmetry: int
    orbit_sizes: dict[int, int]


@dataclass
class EnumerationReport:
    dims: Dims
    pruning: str
    counts: dict[int, ValueCount]
    labelings: dict[int, list[tuple[int, ...]]] = field(repr=False)
    representatives: dict[int, list[tuple[int, ...]]] = field(repr=False)
    nodes: int = 0
    wall_time: float = 0.0
    complete: bool = True

    @property
    def total_raw(self) -> int:
        return sum(c.raw for c in self.counts.values())

    @property
    def total_up_to_symmetry(self) -> int:
        return sum(c.up_to_symmetry for c in self.counts.values())

    def raw(self, S: int) -> int:
        return self.counts[S].raw if S in self.counts else 0

    def up_to_symmetry(self, S: int) -> int:
        return self.counts[S].up_to_symmetry if S in self.counts else 0

    def all_labelings(self) -> list[Labeling]:
        return [Labeling(self.dims, lab) for S in sorted(self.labelings) for lab in self.labelings[S]]

    def summary(self) -> dict:
        """Deterministic part of the report (no timings)."""
        return {
            "m": self.dims.m,
            "n": self.dims.n,
            "complete": self.complete,
            "counts": {
                str(S): {"raw": c.raw, "up_to_symmetry": c.up_to_symmetry,
                         "orbit_sizes": {str(k): v for k, v in sorted(c.orbit_sizes.items())}}
                for S, c in sorted(self.counts.items())
            },
            "total_raw": self.total_raw,
            "total_up_to_symmetry": self.total_up_to_symmetry,
        }


@dataclass(frozen=True)
class Schedule:
    free_cell: np.ndarray
    forced_start: np.ndarray
    forced_cell: np.ndarray
    forced_dep: np.ndarray
    check_start: np.ndarray
    check_cell: np.ndarray
    check_kind: np.ndarray  # 0 face (target S), 1 and 2 the two digons

    def targets(self, S: int, digon_target: int) -> np.ndarray:
        return np.where(self.check_kind == 0, S, digon_target).astype(np.int64)


def free_order(dims: Dims) -> list[tuple[int, int]]:
    """Row 1 and column 1, interleaved so forced cells appear as early as possible."""
    order = [(1, 1)]
    for L in range(2, max(dims.m, dims.n) + 1):
        if L <= dims.m:
            order.append((L, 1))
        if L <= dims.n:
            order.append((1, L))
    return order


def build_schedule(dims: Dims, digon_checks: bool) -> Schedule:
    m, n = dims.m, dims.n
    idx = dims.index
    known_at: dict[tuple[int, int], int] = {}
    free, forced_start, forced_cell, forced_dep = [], [0], [], []
    for step, v in enumerate(free_order(dims)):
        free.append(idx(*v))
        known_at[v] = step
        changed = True
        while changed:
            changed = False
            for j in range(2, n + 1):
                for i in range(2, m + 1):
                    if (i, j) in known_at:
                        continue
                    deps = [(i - 1, j - 1), (i - 1, j), (i, j - 1)]
                    if all(d in known_at for d in deps):
                        known_at[i, j] = step
                        forced_cell.append(idx(i, j))
                        forced_dep.append([idx(*d) for d in deps])
                        changed = True
        forced_start.append(len(forced_cell))
    assert len(known_at) == dims.size

    checks: list[tuple[int, list[int], int]] = []
    interior = (m - 1) * (n - 1)
    for face in c4_faces(dims)[interior:]:
        checks.append((max(known_at[v] for v in face), [idx(*v) for v in face], 0))
    if digon_checks:
        for kind, pair in ((1, [(1, 1), (m, n)]), (2, [(m, 1), (1, n)])):
            checks.append((max(known_at[v] for v in pair), [idx(*v) for v in pair] + [-1, -1], kind))
    checks.sort(key=lambda c: (c[0], c[2]))
    F = len(free)
    check_start = [0] * (F + 1)
    for step, _, _ in checks:
        check_start[step + 1] += 1
    for t in range(F):
        check_start[t + 1] += check_start[t]

    as_arr = lambda a, shape=None: np.asarray(a, dtype=np.int64).reshape(shape if shape else -1)
    return Schedule(
        free_cell=as_arr(free),
        forced_start=as_arr(forced_start),
        forced_cell=as_arr(forced_cell),
        forced_dep=as_arr(forced_dep, (-1, 3)) if forced_dep else np.zeros((0, 3), np.int64),
        check_start=as_arr(check_start),
        check_cell=as_arr([c[1] for c in checks], (-1, 4)) if checks else np.zeros((0, 4), np.int64),
        check_kind=as_arr([c[2] for c in checks]),
    )


def admissible_values(dims: Dims, pruning: Pruning) -> list[tuple[int, int]]:
    """(S, digon target) pairs to search; digon target 0 means unconstrained."""
    N = dims.size
    if pruning == "pure":
        return [(S, 0) for S in range(10, 4 * N - 6 + 1)]
    if dims.odd:
        return [(2 * N + 1, (3 * N + 1) // 2), (2 * N + 2, N + 1), (2 * N + 3, (N + 3) // 2)]
    return [(2 * N + 2, 0)]


def _run_task(task):
    sched, N, S, digon_target, prefix, max_nodes = task
    cap = 4096
    args = (N, S, sched.free_cell, sched.forced_start, sched.forced_cell, sched.forced_dep,
            sched.check_start, sched.check_cell, sched.targets(S, digon_target),
            np.asarray(prefix, dtype=np.int64), max_nodes)
    while True:
        out = np.zeros((cap, N), np.int64)
        found, nodes, status = _kernel.search(*args, out)
        if found <= cap or status != _kernel.COMPLETE:
            break
        cap = found
    sols = [tuple(int(v) for v in row) for row in out[:min(found, cap)]]
    return S, sols, int(nodes), int(status)


def _tasks(sched: Schedule, cfg: SearchConfig, values):
    N = cfg.dims.size
    depth = min(cfg.split_depth, len(sched.free_cell)) if cfg.worker_count > 1 else 0
    for S, D in values:
        if depth == 0:
            yield (sched, N, S, D, (), cfg.max_nodes)
            continue
        prefixes = [()]
        for _ in range(depth):
            prefixes = [p + (v,) for p in prefixes for v in range(1, N + 1) if v not in p]
        for p in prefixes:
            yield (sched, N, S, D, p, cfg.max_nodes)


def enumerate_all(cfg: SearchConfig) -> EnumerationReport:
    t0 = time.perf_counter()
    dims = cfg.dims
    values = admissible_values(dims, cfg.pruning)
    if cfg.value_filter is not None:
        values = [(S, D) for S, D in values if S == cfg.value_filter]
        if not values and cfg.pruning == "pure":
            values = [(cfg.value_filter, 0)]
    lemma_digons = cfg.pruning == "lemma" and dims.odd
    sched = build_schedule(dims, digon_checks=lemma_digons)

    found: dict[int, list[tuple[int, ...]]] = {S: [] for S, _ in values}
    nodes, complete = 0, True
    tasks = list(_tasks(sched, cfg, values))
    if cfg.worker_count == 1:
        results = []
        for task in tasks:
            if cfg.max_nodes:
                remaining = cfg.max_nodes - nodes
                if remaining <= 0:
                    complete = False
                    break
                task = task[:-1] + (remaining,)
            r = _run_task(task)
            nodes += r[2]
            results.append(r)
        nodes = 0
    else:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * cfg.worker_count))))
    for S, sols, k, status in results:
        found[S].extend(sols)
        nodes += k
        complete &= status == _kernel.COMPLETE
    if cfg.max_nodes and nodes > cfg.max_nodes:
        complete = False

    counts, reps = {}, {}
    for S in sorted(found):
        sols = sorted(found[S])
        found[S] = sols
        if not sols:
            continue
        canon = Counter(canonical_labels(dims, s) for s in sols)
        reps[S] = sorted(canon)
        # each orbit meets the raw set in exactly orbit-size labelings
        orbit_sizes = Counter(canon.values())
        counts[S] = ValueCount(S, len(sols), len(canon), dict(sorted(orbit_sizes.items())))
    found = {S: v for S, v in found.items() if v}
    return EnumerationReport(dims, cfg.pruning, counts, found, reps, nodes,
                             time.perf_counter() - t0, complete)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("FACEMAGIC_WORKERS", "1")))
    except ValueError:
        return 1


# -- conjecture harness ------------------------------------------------------------------

@dataclass
class ConjectureReport:
    dims: Dims
    enumerated: list[tuple[int, ...]]
    constructed: dict[tuple[int, ...], list[str]]
    verdict: Literal["equal", "enumerated-strictly-larger", "constructed-not-enumerated", "inconclusive"]
    only_enumerated: list[tuple[int, ...]]
    only_constructed: list[tuple[int, ...]]

    def summary(self) -> dict:
        return {
            "m": self.dims.m,
            "n": self.dims.n,
            "verdict": self.verdict,
            "enumerated_standard": len(self.enumerated),
            "constructed": len(self.constructed),
            "sources": {" ".join(map(str, k)): v for k, v in sorted(self.constructed.items())},
            "witnesses": [list(w) for w in self.only_enumerated[:8]],
        }


def constructed_standard_set(m: int, n: int) -> dict[tuple[int, ...], list[str]]:
    """Label arrays of every HBBL/VBBL construction, with the sequences producing each."""
    out: dict[tuple[int, ...], list[str]] = {}
    for F in constructed_sequences(m, n):
        out.setdefault(build(F).labels, []).append(f"{F.orientation.value}:{F}")
    return out


def conjecture_check(m: int, n: int, max_nodes: int = 0, pruning: Pruning = "lemma",
                     workers: int = 1) -> ConjectureReport:
    dims = Dims(m, n)
    dims.require_odd()
    S = 2 * dims.size + 3
    rep = enumerate_all(SearchConfig(dims, value_filter=S, pruning=pruning,
                                     worker_count=workers, max_nodes=max_nodes))
    constructed = constructed_standard_set(m, n)
    if not rep.complete:
        return ConjectureReport(dims, [], constructed, "inconclusive", [], [])
    standard = sorted({standardize(Labeling(dims, lab)).labels for lab in rep.labelings.get(S, [])})
    enum_set, cons_set = set(standard), set(constructed)
    only_e, only_c = sorted(enum_set - cons_set), sorted(cons_set - enum_set)
    if only_c:
        verdict = "constructed-not-enumerated"
    elif only_e:
        verdict = "enumerated-strictly-larger"
    else:
        verdict = "equal"
    return ConjectureReport(dims, standard, constructed, verdict, only_e, only_c)


# -- equivalence-class census --------------------------------------------------------------

@dataclass
class CensusEntry:
    standard: tuple[int, ...]
    class_size: int
    orbits_klein: int
    orbits_full: int
    expected_class_size: int

    @property
    def matches(self) -> bool:
        return self.class_size == self.expected_class_size


_KLEIN = (Symmetry.R0, Symmetry.R180, Symmetry.H, Symmetry.V)


def _orbit_count(dims: Dims, labelings: set[tuple[int, ...]], syms) -> int:
    perms = [symmetry_permutation(s, dims) for s in syms]
    seen: set[tuple[int, ...]] = set()
    for lab in labelings:
        seen.add(min(tuple(_move(lab, p)) for p in perms))
    return len(seen)


def _move(lab, p):
    out = [0] * len(lab)
    for k, x in enumerate(lab):
        out[p[k]] = x
    return out


def bicentral_equivalence_census(m: int, n: int, standards: list[Labeling] | None = None,
                                 max_nodes: int = 0) -> dict[tuple[int, ...], CensusEntry]:
    """Class sizes of each standard balanced labeling, raw and modulo symmetries.

    ``standards`` defaults to the standard forms found by full enumeration.
    """
    from facemagic.formulas import beta
    from facemagic.grid import symmetry_group

    dims = Dims(m, n)
    if standards is None:
        report = conjecture_check(m, n, max_nodes=max_nodes)
        if report.verdict == "inconclusive":
            raise RuntimeError("enumeration budget exceeded")
        standards = [Labeling(dims, lab) for lab in report.enumerated]
    expected = beta(m) * 2 ** dims.m0 * beta(n) * 2 ** dims.n0
    out = {}
    for L in standards:
        if not is_standard(L):
            raise ValueError("census input must be standard")
        cls = equivalence_class(L)
        out[L.labels] = CensusEntry(L.labels, len(cls), _orbit_count(dims, cls, _KLEIN),
                                    _orbit_count(dims, cls, symmetry_group(dims)), expected)
    return out


def lemma_case(L: Labeling, S: int) -> int | None:
    m, n = L.dims.m, L.dims.n
    return lemma_digon_case(L.dims, S, L(1, 1) + L(m, n), L(m, 1) + L(1, n))
