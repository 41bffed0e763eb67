"""The m x n projective grid graph: vertices, quadrilateral faces, digons, symmetries.

Coordinates are (i, j) = (column, row), both 1-based, with row j = 1 drawn at the
bottom.  Flat indices are row-major: ``(j - 1) * m + (i - 1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

Vertex = tuple[int, int]
QuadFace = tuple[Vertex, Vertex, Vertex, Vertex]
Digon = frozenset  # frozenset of two vertices


@dataclass(frozen=True, order=True)
class Dims:
    m: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("grid dimensions must be integers")
        if self.m < 2 or self.n < 2:
            raise ValueError(f"grid dimensions must be >= 2, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return self.m * self.n

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1 and self.n % 2 == 1

    @property
    def even(self) -> bool:
        return self.m % 2 == 0 and self.n % 2 == 0

    @property
    def square(self) -> bool:
        return self.m == self.n

    @property
    def m0(self) -> int:
        if self.m % 2 == 0:
            raise ValueError("m0 is defined only for odd m")
        return (self.m - 1) // 2

    @property
    def n0(self) -> int:
        if self.n % 2 == 0:
            raise ValueError("n0 is defined only for odd n")
        return (self.n - 1) // 2

    @property
    def m0p(self) -> int:
        return self.m0 + 1

    @property
    def n0p(self) -> int:
        return self.n0 + 1

    @property
    def center(self) -> Vertex:
        return (self.m0p, self.n0p)

    def index(self, i: int, j: int) -> int:
        return (j - 1) * self.m + (i - 1)

    def vertex(self, k: int) -> Vertex:
        j, i = divmod(k, self.m)
        return (i + 1, j + 1)

    def vertices(self) -> list[Vertex]:
        return [(i, j) for j in range(1, self.n + 1) for i in range(1, self.m + 1)]

    def contains(self, v: Vertex) -> bool:
        i, j = v
        return 1 <= i <= self.m and 1 <= j <= self.n

    def require_odd(self) -> None:
        if not self.odd:
            raise ValueError(f"operation requires odd m and n, got {self.m}x{self.n}")


class Symmetry(str, enum.Enum):
    R0 = "R0"
    R90 = "R90"
    R180 = "R180"
    R270 = "R270"
    H = "H"
    V = "V"
    DPLUS = "D+"
    DMINUS = "D-"

    @property
    def needs_square(self) -> bool:
        return self in (Symmetry.R90, Symmetry.R270, Symmetry.DPLUS, Symmetry.DMINUS)

    @classmethod
    def parse(cls, tag: str) -> "Symmetry":
        try:
            return cls(tag.upper())
        except ValueError:
            raise ValueError(f"unknown symmetry tag {tag!r}") from None


_INVERSE = {
    Symmetry.R90: Symmetry.R270,
    Symmetry.R270: Symmetry.R90,
}


def inverse(sym: Symmetry) -> Symmetry:
    return _INVERSE.get(sym, sym)


def c4_faces(dims: Dims) -> list[QuadFace]:
    """All quadrilateral faces, interior first, then right-left and top-bottom wraps."""
    m, n = dims.m, dims.n
    faces: list[QuadFace] = []
    for j in range(1, n):
        for i in range(1, m):
            faces.append(((i, j), (i, j + 1), (i + 1, j + 1), (i + 1, j)))
    for j in range(1, n):
        faces.append(((m, j), (m, j + 1), (1, n - j), (1, n + 1 - j)))
    for i in range(1, m):
        faces.append(((i, n), (i + 1, n), (m - i, 1), (m + 1 - i, 1)))
    return faces


def digons(dims: Dims) -> tuple[frozenset, frozenset]:
    m, n = dims.m, dims.n
    return frozenset({(1, 1), (m, n)}), frozenset({(m, 1), (1, n)})


def symmetry_group(dims: Dims) -> list[Symmetry]:
    if dims.square:
        return list(Symmetry)
    return [Symmetry.R0, Symmetry.R180, Symmetry.H, Symmetry.V]


def apply_symmetry(sym: Symmetry, dims: Dims, v: Vertex) -> Vertex:
    """Image of vertex ``v`` under ``sym``; rotations are counter-clockwise."""
    if sym.needs_square and not dims.square:
        raise ValueError(f"symmetry {sym.value} requires a square grid, got {dims.m}x{dims.n}")
    m, n = dims.m, dims.n
    i, j = v
    if sym is Symmetry.R0:
        return (i, j)
    if sym is Symmetry.R180:
        return (m + 1 - i, n + 1 - j)
    if sym is Symmetry.H:
        return (i, n + 1 - j)
    if sym is Symmetry.V:
        return (m + 1 - i, j)
    if sym is Symmetry.R90:
        return (m + 1 - j, i)
    if sym is Symmetry.R270:
        return (j, m + 1 - i)
    if sym is Symmetry.DPLUS:
        return (j, i)
    return (m + 1 - j, m + 1 - i)


@lru_cache(maxsize=None)
def symmetry_permutation(sym: Symmetry, dims: Dims) -> tuple[int, ...]:
    """Flat-index map ``k -> index(apply_symmetry(sym, vertex(k)))``."""
    return tuple(dims.index(*apply_symmetry(sym, dims, dims.vertex(k))) for k in range(dims.size))


def compose(a: Symmetry, b: Symmetry, dims: Dims) -> Symmetry:
    """The symmetry equal to applying ``b`` first and then ``a``."""
    pa, pb = symmetry_permutation(a, dims), symmetry_permutation(b, dims)
    target = tuple(pa[pb[k]] for k in range(dims.size))
    for s in symmetry_group(dims):
        if symmetry_permutation(s, dims) == target:
            return s
    raise ValueError(f"{a.value}*{b.value} is not in the symmetry group of {dims.m}x{dims.n}")
