"""Factorization sequences and the alternating lexicographic constructions built on them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from facemagic.grid import Dims
from facemagic.labeling import Labeling, center_monotone


class Orientation(str, enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


def _ordered_factorizations(x: int, parts: int) -> list[tuple[int, ...]]:
    """Ordered factorizations of x into exactly ``parts`` factors, each > 1."""
    if parts == 1:
        return [(x,)] if x > 1 else []
    out = []
    for d in range(2, x + 1):
        if x % d == 0:
            out.extend((d,) + rest for rest in _ordered_factorizations(x // d, parts - 1))
    return out


@dataclass(frozen=True)
class FactorizationSequence:
    """An alternating sequence (f1, g1, f2, g2, ..., fk, gk).

    Horizontal: prod f = m and prod g = n.  Vertical: prod f = n and prod g = m,
    the sequence then being an (n, m)-sequence used to build an m x n labeling.
    A trailing ``gk == 1`` encodes the odd-length convention.
    """

    orientation: Orientation
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        f = tuple(int(x) for x in self.factors)
        object.__setattr__(self, "factors", f)
        object.__setattr__(self, "orientation", Orientation(self.orientation))
        if len(f) % 2:
            f = f + (1,)
            object.__setattr__(self, "factors", f)
        if not f:
            raise ValueError("factorization sequence is empty")
        if any(x % 2 == 0 for x in f):
            raise ValueError(f"factors must be odd, got {f}")
        if any(x <= 1 for x in f[:-1]) or f[-1] < 1:
            raise ValueError(f"every factor except a trailing 1 must exceed 1, got {f}")

    @property
    def k(self) -> int:
        return len(self.factors) // 2

    @property
    def first(self) -> tuple[int, ...]:
        return self.factors[0::2]

    @property
    def second(self) -> tuple[int, ...]:
        return self.factors[1::2]

    @property
    def dims(self) -> Dims:
        """Dimensions of the labeling this sequence builds."""
        a, b = _prod(self.first), _prod(self.second)
        return Dims(a, b) if self.orientation is Orientation.HORIZONTAL else Dims(b, a)

    @property
    def display(self) -> tuple[int, ...]:
        """Factors without the trailing 1 of the odd-length convention."""
        return self.factors[:-1] if self.factors[-1] == 1 else self.factors

    def __str__(self) -> str:
        return ",".join(map(str, self.display))


def _prod(xs: Sequence[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def enumerate_factorization_sequences(
    m: int, n: int, orientation: Orientation = Orientation.HORIZONTAL
) -> list[FactorizationSequence]:
    """All (m, n)-projective factorization sequences, shortest first."""
    if m < 3 or n < 3 or m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"factorization sequences need odd m, n >= 3, got ({m}, {n})")
    out = []
    k = 1
    while 2 ** k <= max(m, n):
        for fs in _ordered_factorizations(m, k):
            for gs in _ordered_factorizations(n, k):
                out.append(tuple(x for pair in zip(fs, gs) for x in pair))
        for fs in _ordered_factorizations(m, k + 1):
            for gs in _ordered_factorizations(n, k):
                out.append(tuple(x for pair in zip(fs, gs + (1,)) for x in pair))
        k += 1
    return [FactorizationSequence(orientation, f) for f in out]


def tau(m: int, n: int) -> int:
    return len(enumerate_factorization_sequences(m, n))


@dataclass(frozen=True)
class PartialLabeling:
    """Labels on the m x n corner subgrid of the ambient M x N projective grid."""

    ambient: Dims
    sub: Dims
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if len(self.labels) != self.sub.size:
            raise ValueError(f"expected {self.sub.size} labels, got {len(self.labels)}")
        if self.sub.m > self.ambient.m or self.sub.n > self.ambient.n:
            raise ValueError(f"subgrid {self.sub} does not fit in ambient {self.ambient}")

    def __call__(self, i: int, j: int) -> int:
        return self.labels[(j - 1) * self.sub.m + (i - 1)]

    def to_labeling(self) -> Labeling:
        if self.sub != self.ambient:
            raise ValueError(f"partial labeling covers {self.sub}, not the whole {self.ambient}")
        return Labeling(self.ambient, self.labels)


def _require_partial_dims(M: int, N: int, m: int, n: int) -> None:
    if any(x % 2 == 0 for x in (M, N, m, n)):
        raise ValueError(f"all dimensions must be odd, got M={M} N={N} m={m} n={n}")
    if m < 3 or n < 3:
        raise ValueError(f"subgrid must be at least 3x3, got {m}x{n}")
    if m > M or n > N:
        raise ValueError(f"subgrid {m}x{n} exceeds ambient {M}x{N}")


def hall(M: int, N: int, m: int, n: int) -> PartialLabeling:
    _require_partial_dims(M, N, m, n)
    MN, m0, n0 = M * N, (m - 1) // 2, (n - 1) // 2
    x = {}
    for i in range(1, m0 + 2):
        for j in range(1, n0 + 2):
            x[2 * i - 1, 2 * j - 1] = m * (j - 1) + i
    for i in range(1, m0 + 1):
        for j in range(1, n0 + 1):
            x[2 * i, 2 * j] = m * (j - 1) + m0 + 1 + i
    for i in range(1, m0 + 1):
        for j in range(1, n0 + 2):
            x[2 * i, 2 * j - 1] = MN + m * (1 - j) + 1 - i
    for i in range(1, m0 + 2):
        for j in range(1, n0 + 1):
            x[2 * i - 1, 2 * j] = MN - m * j + m0 + 1 + 1 - i
    return _from_cells(Dims(M, N), Dims(m, n), x)


def vall(M: int, N: int, m: int, n: int) -> PartialLabeling:
    _require_partial_dims(M, N, m, n)
    MN, m0, n0 = M * N, (m - 1) // 2, (n - 1) // 2
    y = {}
    for i in range(1, m0 + 2):
        for j in range(1, n0 + 2):
            y[2 * i - 1, 2 * j - 1] = n * (i - 1) + j
    for i in range(1, m0 + 1):
        for j in range(1, n0 + 1):
            y[2 * i, 2 * j] = n * (i - 1) + n0 + 1 + j
    for i in range(1, m0 + 1):
        for j in range(1, n0 + 2):
            y[2 * i, 2 * j - 1] = MN - n * i + n0 + 1 + 1 - j
    for i in range(1, m0 + 2):
        for j in range(1, n0 + 1):
            y[2 * i - 1, 2 * j] = MN + n * (1 - i) + 1 - j
    return _from_cells(Dims(M, N), Dims(m, n), y)


def _from_cells(ambient: Dims, sub: Dims, cells: dict) -> PartialLabeling:
    return PartialLabeling(ambient, sub, tuple(cells[i, j] for (i, j) in sub.vertices()))


def _block_label(x: int, parity_odd: bool, k: int, reflected: bool, MN: int, mn: int) -> int:
    # reflected blocks sit at offset (2k-1); (2k-1)mn is odd, so the halves are exact
    if reflected:
        half = (2 * k - 1) * mn
        return MN - x + (half + 3) // 2 if parity_odd else MN - x + (3 - half) // 2
    return x - k * mn if parity_odd else x + k * mn


def _check_factor(r: int) -> None:
    if r < 1 or r % 2 == 0:
        raise ValueError(f"connected-sum factor must be odd, got {r}")


def h_connected_sum(X: PartialLabeling, r: int) -> PartialLabeling:
    """Replicate X r times horizontally with alternating offsets; r = 1 is the identity."""
    _check_factor(r)
    if r == 1:
        return X
    m, n = X.sub.m, X.sub.n
    if r * m > X.ambient.m:
        raise ValueError(f"{r} blocks of width {m} exceed ambient width {X.ambient.m}")
    MN, mn, r0 = X.ambient.size, X.sub.size, (r - 1) // 2
    y = {}
    for i, j in X.sub.vertices():
        odd = (i + j) % 2 == 1
        for k in range(0, r0 + 1):
            y[2 * k * m + i, j] = _block_label(X(i, j), odd, k, False, MN, mn)
            if k >= 1:
                y[(2 * k - 1) * m + i, j] = _block_label(X(i, j), odd, k, True, MN, mn)
    return _from_cells(X.ambient, Dims(r * m, n), y)


def v_connected_sum(X: PartialLabeling, r: int) -> PartialLabeling:
    _check_factor(r)
    if r == 1:
        return X
    m, n = X.sub.m, X.sub.n
    if r * n > X.ambient.n:
        raise ValueError(f"{r} blocks of height {n} exceed ambient height {X.ambient.n}")
    MN, mn, r0 = X.ambient.size, X.sub.size, (r - 1) // 2
    y = {}
    for i, j in X.sub.vertices():
        odd = (i + j) % 2 == 1
        for k in range(0, r0 + 1):
            y[i, 2 * k * n + j] = _block_label(X(i, j), odd, k, False, MN, mn)
            if k >= 1:
                y[i, (2 * k - 1) * n + j] = _block_label(X(i, j), odd, k, True, MN, mn)
    return _from_cells(X.ambient, Dims(m, r * n), y)


def partial_bb_violations(X: PartialLabeling) -> list[str]:
    """Which of the six partial-balance conditions fail (empty when all hold)."""
    m, n, MN, mn = X.sub.m, X.sub.n, X.ambient.size, X.sub.size
    if any(v % 2 == 0 for v in (m, n, X.ambient.m, X.ambient.n)):
        raise ValueError("partial balance is defined for odd dimensions only")
    bad = []
    target = 2 * MN + 3
    faces = [(i, j) for j in range(1, n) for i in range(1, m)
             if X(i, j) + X(i + 1, j) + X(i, j + 1) + X(i + 1, j + 1) != target]
    if faces:
        bad.append(f"(1) face sum != {target} at lower-left corners {faces[:4]}")
    even = sorted(X(i, j) for i, j in X.sub.vertices() if (i + j) % 2 == 0)
    odd = sorted(X(i, j) for i, j in X.sub.vertices() if (i + j) % 2 == 1)
    if even != list(range(1, (mn + 1) // 2 + 1)):
        bad.append("(2) even cells do not carry 1..(mn+1)/2")
    if odd != list(range(MN - (mn - 3) // 2, MN + 1)):
        bad.append("(3) odd cells do not carry MN-(mn-3)/2..MN")
    lo, hi = (mn + 3) // 2, 2 * MN - (mn - 3) // 2
    for i, j in X.sub.vertices():
        s = X(i, j) + X(m + 1 - i, n + 1 - j)
        if (i + j) % 2 == 0 and s != lo:
            bad.append(f"(4) pair sum at ({i},{j}) is {s}, expected {lo}")
            break
        if (i + j) % 2 == 1 and s != hi:
            bad.append(f"(5) pair sum at ({i},{j}) is {s}, expected {hi}")
            break
    if not center_monotone(X, m, n):
        bad.append("(6) center row/column monotonicity fails")
    return bad


def is_partial_bb(X: PartialLabeling) -> bool:
    return not partial_bb_violations(X)


def _as_sequence(F, orientation: Orientation) -> FactorizationSequence:
    if isinstance(F, FactorizationSequence):
        if F.orientation is not orientation:
            raise ValueError(f"expected a {orientation.value} sequence, got {F.orientation.value}")
        return F
    return FactorizationSequence(orientation, tuple(F))


def hbbl(F) -> Labeling:
    """Horizontal bicentrally balanced labeling of an (m, n)-factorization sequence."""
    F = _as_sequence(F, Orientation.HORIZONTAL)
    d = F.dims
    ms, ns = F.first, F.second
    X = hall(d.m, d.n, ms[0], ns[0])
    for mi, ni in zip(ms[1:], ns[1:]):
        X = v_connected_sum(h_connected_sum(X, mi), ni)
    return X.to_labeling()


def vbbl(F) -> Labeling:
    """Vertical bicentrally balanced labeling of an (n, m)-factorization sequence (n1, m1, ...)."""
    F = _as_sequence(F, Orientation.VERTICAL)
    d = F.dims
    ns, ms = F.first, F.second
    X = vall(d.m, d.n, ms[0], ns[0])
    for ni, mi in zip(ns[1:], ms[1:]):
        X = h_connected_sum(v_connected_sum(X, ni), mi)
    return X.to_labeling()


def build(F: FactorizationSequence) -> Labeling:
    return hbbl(F) if F.orientation is Orientation.HORIZONTAL else vbbl(F)


def constructed_sequences(m: int, n: int) -> list[FactorizationSequence]:
    """Every sequence feeding an m x n construction: (m, n) horizontal and (n, m) vertical."""
    return (enumerate_factorization_sequences(m, n, Orientation.HORIZONTAL)
            + enumerate_factorization_sequences(n, m, Orientation.VERTICAL))
