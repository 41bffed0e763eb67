"""Labelings of the projective grid and their magic, balance and standardness checks."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from facemagic.grid import Dims, Symmetry, c4_faces, symmetry_group, symmetry_permutation


class LabelingError(ValueError):
    """Label array is not a bijection onto 1..mn."""


class StructureViolation(ValueError):
    """A row-pair identity of a bicentrally balanced labeling fails."""

    def __init__(self, identity: str, i: int, j: int, expected: int, got: int):
        self.identity = identity
        self.i, self.j = i, j
        self.expected, self.got = expected, got
        super().__init__(f"{identity} fails at column {i}, row pair ({j}): expected {expected}, got {got}")


class ValueClass(str, enum.Enum):
    S_MINUS = "S_minus"
    S_MID = "S_mid"
    S_PLUS = "S_plus"
    OTHER = "other"


def _check_bijection(labels: Sequence[int], size: int) -> None:
    if len(labels) != size:
        raise LabelingError(f"expected {size} labels, got {len(labels)}")
    seen: set[int] = set()
    for k, x in enumerate(labels):
        if not 1 <= x <= size:
            raise LabelingError(f"label {x} at position {k} is out of range 1..{size}")
        if x in seen:
            raise LabelingError(f"label {x} is duplicated")
        seen.add(x)


@dataclass(frozen=True)
class Labeling:
    """A bijection from the vertices of an m x n grid to 1..mn, stored row-major."""

    dims: Dims
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        _check_bijection(self.labels, self.dims.size)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], top_down: bool = False) -> "Labeling":
        """Build from rows listed with j = 1 first, or j = n first if ``top_down``."""
        rows = [list(r) for r in rows]
        if top_down:
            rows.reverse()
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise LabelingError("rows must be non-empty and of equal length")
        dims = Dims(len(rows[0]), len(rows))
        return cls(dims, tuple(x for r in rows for x in r))

    @classmethod
    def from_function(cls, dims: Dims, f: Callable[[int, int], int]) -> "Labeling":
        return cls(dims, tuple(f(i, j) for (i, j) in dims.vertices()))

    def __call__(self, i: int, j: int) -> int:
        return self.labels[(j - 1) * self.dims.m + (i - 1)]

    at = __call__

    def rows(self) -> list[tuple[int, ...]]:
        m = self.dims.m
        return [self.labels[j * m:(j + 1) * m] for j in range(self.dims.n)]

    def __str__(self) -> str:
        width = len(str(self.dims.size))
        return "\n".join(" ".join(f"{x:>{width}}" for x in row) for row in reversed(self.rows()))


@dataclass(frozen=True)
class MagicReport:
    is_magic: bool
    S: int | None
    D1: int
    D2: int
    value_class: ValueClass
    face_sums: tuple[tuple[int, int], ...] = field(default=(), compare=False)


def face_sums(L: Labeling) -> list[int]:
    return [sum(L(*v) for v in face) for face in c4_faces(L.dims)]


def digon_sums(L: Labeling) -> tuple[int, int]:
    m, n = L.dims.m, L.dims.n
    return L(1, 1) + L(m, n), L(m, 1) + L(1, n)


def classify_value(dims: Dims, S: int | None) -> ValueClass:
    if S is None:
        return ValueClass.OTHER
    mn = dims.size
    if dims.odd:
        return {2 * mn + 1: ValueClass.S_MINUS, 2 * mn + 2: ValueClass.S_MID,
                2 * mn + 3: ValueClass.S_PLUS}.get(S, ValueClass.OTHER)
    if dims.even and S == 2 * mn + 2:
        return ValueClass.S_MID
    return ValueClass.OTHER


def verify(L: Labeling) -> MagicReport:
    sums = face_sums(L)
    D1, D2 = digon_sums(L)
    if len(set(sums)) == 1:
        S = sums[0]
        return MagicReport(True, S, D1, D2, classify_value(L.dims, S))
    # capped multiset of the offending sums, for diagnostics only
    summary = tuple(sorted(Counter(sums).items()))[:16]
    return MagicReport(False, None, D1, D2, ValueClass.OTHER, summary)


def lemma_digon_case(dims: Dims, S: int, D1: int, D2: int) -> int | None:
    """Which of the three (S, D1, D2) cases an odd x odd magic labeling falls in, or None."""
    mn = dims.size
    cases = {
        1: (2 * mn + 1, (3 * mn + 1) // 2),
        2: (2 * mn + 2, mn + 1),
        3: (2 * mn + 3, (mn + 3) // 2),
    }
    hits = [k for k, (s, d) in cases.items() if S == s and D1 == d and D2 == d]
    return hits[0] if len(hits) == 1 else None


def complement(L: Labeling) -> Labeling:
    top = L.dims.size + 1
    return Labeling(L.dims, tuple(top - x for x in L.labels))


def target_pair_sum(dims: Dims, v: tuple[int, int]) -> int:
    dims.require_odd()
    mn = dims.size
    i, j = v
    return (mn + 3) // 2 if (i + j) % 2 == 0 else (3 * mn + 3) // 2


def is_bicentrally_balanced(L: Labeling) -> bool:
    d = L.dims
    d.require_odd()
    m, n = d.m, d.n
    return all(L(i, j) + L(m + 1 - i, n + 1 - j) == target_pair_sum(d, (i, j)) for (i, j) in d.vertices())


def is_bb_magic(L: Labeling) -> bool:
    """Bicentrally balanced and C4-face-magic (necessarily with value 2mn + 3)."""
    return L.dims.odd and is_bicentrally_balanced(L) and verify(L).is_magic


def require_bb_magic(L: Labeling) -> None:
    L.dims.require_odd()
    if not is_bb_magic(L):
        raise ValueError("labeling is not a bicentrally balanced C4-face-magic labeling")


def row_pair_sums(L: Labeling) -> list[int]:
    """The sums a_j = x(1,j) + x(1,j+1) for j <= n0, after checking every row-pair identity.

    Raises StructureViolation naming the first identity that fails.
    """
    d = L.dims
    require_bb_magic(L)
    m, n, m0, n0 = d.m, d.n, d.m0, d.n0
    S = 2 * d.size + 3
    a = [L(1, j) + L(1, j + 1) for j in range(1, n0 + 1)]
    for i in range(1, m0 + 1):
        for j in range(1, n0 + 1):
            low, high = (a[j - 1], S - a[j - 1]) if i % 2 == 1 else (S - a[j - 1], a[j - 1])
            checks = (
                ("x(i,j)+x(i,j+1)", i, L(i, j) + L(i, j + 1), low),
                ("x(m+1-i,j)+x(m+1-i,j+1)", m + 1 - i, L(m + 1 - i, j) + L(m + 1 - i, j + 1), low),
                ("x(i,n+1-j)+x(i,n-j)", i, L(i, n + 1 - j) + L(i, n - j), high),
                ("x(m+1-i,n+1-j)+x(m+1-i,n-j)", m + 1 - i, L(m + 1 - i, n + 1 - j) + L(m + 1 - i, n - j), high),
            )
            for name, col, got, expected in checks:
                if got != expected:
                    raise StructureViolation(name, col, j, expected, got)
    return a


def center_monotone(at: Callable[[int, int], int], m: int, n: int) -> bool:
    """The four alternating monotonicity conditions on the center row and center column."""
    cr, cc = (n + 1) // 2, (m + 1) // 2
    for i in range(1, m - 1):
        a, b = at(i, cr), at(i + 2, cr)
        if ((i + cr) % 2 == 0 and not a < b) or ((i + cr) % 2 == 1 and not a > b):
            return False
    for j in range(1, n - 1):
        a, b = at(cc, j), at(cc, j + 2)
        if ((cc + j) % 2 == 0 and not a < b) or ((cc + j) % 2 == 1 and not a > b):
            return False
    return True


def is_standard(L: Labeling) -> bool:
    require_bb_magic(L)
    return center_monotone(L, L.dims.m, L.dims.n)


def apply_symmetry_labeling(sym: Symmetry, L: Labeling) -> Labeling:
    """Move every label along ``sym``: the label at v ends up at sym(v)."""
    p = symmetry_permutation(sym, L.dims)
    out = [0] * L.dims.size
    for k, x in enumerate(L.labels):
        out[p[k]] = x
    return Labeling(L.dims, tuple(out))


def orbit(L: Labeling) -> list[tuple[int, ...]]:
    perms = [symmetry_permutation(s, L.dims) for s in symmetry_group(L.dims)]
    return [_permute(L.labels, p) for p in perms]


def _permute(labels: Sequence[int], p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(labels)
    for k, x in enumerate(labels):
        out[p[k]] = x
    return tuple(out)


def canonical_labels(dims: Dims, labels: Iterable[int]) -> tuple[int, ...]:
    labels = tuple(labels)
    return min(_permute(labels, symmetry_permutation(s, dims)) for s in symmetry_group(dims))


def canonical_form(L: Labeling) -> Labeling:
    return Labeling(L.dims, canonical_labels(L.dims, L.labels))


def orbit_size(L: Labeling) -> int:
    return len(set(orbit(L)))
