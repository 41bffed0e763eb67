"""Elementary projective labeling operations and the standard form of a balanced labeling.

Permutations and masks are 0-indexed sequences over 1..m0 (or 1..n0):
``eta[i - 1]`` is the image of column pair i, ``alpha[i - 1]`` is 0 or 1.
"""

from __future__ import annotations

from typing import Sequence

from facemagic.labeling import Labeling, require_bb_magic, target_pair_sum


def _check_parity_permutation(p: Sequence[int], size: int, what: str) -> None:
    if sorted(p) != list(range(1, size + 1)):
        raise ValueError(f"{what} must be a permutation of 1..{size}, got {tuple(p)}")
    for k, v in enumerate(p, start=1):
        if (v - k) % 2:
            raise ValueError(f"{what} must preserve parity, but maps {k} to {v}")


def _check_mask(mask: Sequence[int], size: int, what: str) -> None:
    if len(mask) != size or any(b not in (0, 1) for b in mask):
        raise ValueError(f"{what} must be a 0/1 mask of length {size}, got {tuple(mask)}")


def _remap_columns(L: Labeling, source: Sequence[int]) -> Labeling:
    """Column i of the result is column source[i - 1] of L."""
    m, n = L.dims.m, L.dims.n
    out = [L(source[i - 1], j) for j in range(1, n + 1) for i in range(1, m + 1)]
    return Labeling(L.dims, tuple(out))


def _remap_rows(L: Labeling, source: Sequence[int]) -> Labeling:
    m, n = L.dims.m, L.dims.n
    out = [L(i, source[j - 1]) for j in range(1, n + 1) for i in range(1, m + 1)]
    return Labeling(L.dims, tuple(out))


def _pair_sources(size: int, half: int, perm: Sequence[int] | None, mask: Sequence[int] | None) -> list[int]:
    src = list(range(1, size + 1))
    for i in range(1, half + 1):
        if perm is not None:
            src[i - 1] = perm[i - 1]
            src[size - i] = size + 1 - perm[i - 1]
        if mask is not None and mask[i - 1]:
            src[i - 1], src[size - i] = size + 1 - i, i
    return src


def permute_column_pairs(L: Labeling, eta: Sequence[int], check: bool = True) -> Labeling:
    d = L.dims
    d.require_odd()
    _check_parity_permutation(eta, d.m0, "eta")
    if check:
        require_bb_magic(L)
    return _remap_columns(L, _pair_sources(d.m, d.m0, eta, None))


def permute_row_pairs(L: Labeling, kappa: Sequence[int], check: bool = True) -> Labeling:
    d = L.dims
    d.require_odd()
    _check_parity_permutation(kappa, d.n0, "kappa")
    if check:
        require_bb_magic(L)
    return _remap_rows(L, _pair_sources(d.n, d.n0, kappa, None))


def swap_columns(L: Labeling, alpha: Sequence[int], check: bool = True) -> Labeling:
    d = L.dims
    d.require_odd()
    _check_mask(alpha, d.m0, "alpha")
    if check:
        require_bb_magic(L)
    return _remap_columns(L, _pair_sources(d.m, d.m0, None, alpha))


def swap_rows(L: Labeling, delta: Sequence[int], check: bool = True) -> Labeling:
    d = L.dims
    d.require_odd()
    _check_mask(delta, d.n0, "delta")
    if check:
        require_bb_magic(L)
    return _remap_rows(L, _pair_sources(d.n, d.n0, None, delta))


def parity_permutations(size: int) -> list[tuple[int, ...]]:
    """All parity-preserving permutations of 1..size."""
    from itertools import permutations

    odds = list(range(1, size + 1, 2))
    evens = list(range(2, size + 1, 2))
    out = []
    for po in permutations(odds):
        for pe in permutations(evens):
            p = [0] * size
            for k, v in zip(odds, po):
                p[k - 1] = v
            for k, v in zip(evens, pe):
                p[k - 1] = v
            out.append(tuple(p))
    return out


def masks(size: int) -> list[tuple[int, ...]]:
    return [tuple((b >> k) & 1 for k in range(size)) for b in range(1 << size)]


def _line_ops(values: dict[int, int], size: int, half: int, fixed: int, target) -> tuple[list[int], list[int]]:
    """Swap mask then sorting permutation for one center line.

    ``values[i]`` is the label at position i along the line, ``fixed`` the
    coordinate of the line itself, ``target(i)`` the pair target at position i.
    """
    mask = []
    for i in range(1, half + 1):
        low = 2 * values[i] < target(i)
        increasing = (i + fixed) % 2 == 0
        mask.append(0 if low == increasing else 1)
    after = dict(values)
    for i in range(1, half + 1):
        if mask[i - 1]:
            after[i], after[size + 1 - i] = values[size + 1 - i], values[i]
    perm = [0] * half
    for parity in (1, 2):
        idx = list(range(parity, half + 1, 2))
        increasing = (parity + fixed) % 2 == 0
        ranked = sorted(idx, key=lambda k: after[k], reverse=not increasing)
        for slot, src in zip(idx, ranked):
            perm[slot - 1] = src
    return mask, perm


def standardize(L: Labeling) -> Labeling:
    """The unique standard labeling equivalent to a bicentrally balanced magic ``L``."""
    d = L.dims
    require_bb_magic(L)
    m, n, cr, cc = d.m, d.n, d.n0p, d.m0p

    row = {i: L(i, cr) for i in range(1, m + 1)}
    if len(set(row.values())) != m:
        raise ValueError("center row labels are not distinct")
    alpha, eta = _line_ops(row, m, d.m0, cr, lambda i: target_pair_sum(d, (i, cr)))
    X = swap_columns(L, alpha, check=False)
    X = permute_column_pairs(X, eta, check=False)

    col = {j: X(cc, j) for j in range(1, n + 1)}
    delta, kappa = _line_ops(col, n, d.n0, cc, lambda j: target_pair_sum(d, (cc, j)))
    X = swap_rows(X, delta, check=False)
    return permute_row_pairs(X, kappa, check=False)


def equivalent(L1: Labeling, L2: Labeling) -> bool:
    if L1.dims != L2.dims:
        raise ValueError(f"dimension mismatch: {L1.dims} vs {L2.dims}")
    return standardize(L1) == standardize(L2)


def equivalence_class(L: Labeling) -> set[tuple[int, ...]]:
    """Label arrays of every labeling reachable from ``L`` by elementary operations.

    Swaps and pair permutations on columns generate a group acting on column
    pairs, likewise on rows, so one swap + one permutation per axis covers it.
    """
    d = L.dims
    require_bb_magic(L)
    cols = []
    for eta in parity_permutations(d.m0):
        for alpha in masks(d.m0):
            cols.append(swap_columns(permute_column_pairs(L, eta, check=False), alpha, check=False))
    out = set()
    for X in cols:
        for kappa in parity_permutations(d.n0):
            for delta in masks(d.n0):
                out.add(swap_rows(permute_row_pairs(X, kappa, check=False), delta, check=False).labels)
    return out
