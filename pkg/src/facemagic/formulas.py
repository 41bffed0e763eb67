"""Closed-form counts for labelings of odd x odd projective grids."""

from __future__ import annotations

from math import factorial

from facemagic.construct import tau


def _require_odd(*xs: int) -> None:
    for x in xs:
        if x < 3 or x % 2 == 0:
            raise ValueError(f"expected an odd integer >= 3, got {x}")


def beta(m: int) -> int:
    """Number of parity-preserving permutations of 1..(m-1)/2."""
    _require_odd(m)
    if m % 4 == 1:
        return factorial((m - 1) // 4) ** 2
    return factorial((m - 3) // 4) * factorial((m + 1) // 4)


def _sequence_factor(m: int, n: int) -> int:
    """tau(m,m) 2^(m-3) for squares, (tau(m,n) + tau(n,m)) 2^((m+n)/2 - 3) otherwise."""
    if m == n:
        return tau(m, m) * 2 ** (m - 3)
    return (tau(m, n) + tau(n, m)) * 2 ** ((m + n) // 2 - 3)


def count_value_mid(m: int, n: int) -> int:
    """Labelings with value 2mn + 2, up to symmetry."""
    _require_odd(m, n)
    return _sequence_factor(m, n) * factorial((m - 1) // 2) * factorial((n - 1) // 2)


def lower_bound_value_plus(m: int, n: int) -> int:
    """Lower bound on labelings with value 2mn + 3 (equally 2mn + 1), up to symmetry."""
    _require_odd(m, n)
    return _sequence_factor(m, n) * beta(m) * beta(n)


def lower_bound_total(m: int, n: int) -> int:
    _require_odd(m, n)
    return _sequence_factor(m, n) * (
        factorial((m - 1) // 2) * factorial((n - 1) // 2) + 2 * beta(m) * beta(n)
    )
