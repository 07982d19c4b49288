"""Exact integer primitives: triangular numbers, integer square roots, and
the classical three-square feasibility test.

Everything is plain integer arithmetic with an explicit width policy: values
live in the signed 64-bit range, and inputs that would push an intermediate
past it are rejected with :class:`WidthError` instead of ever wrapping.
Top-level representation requests are capped harder (``REPRESENT_MAX``) so
that every derived quantity used by the decomposers, 72n + 63 being the
largest, stays in range.
"""

from __future__ import annotations

import math

INT64_MAX = (1 << 63) - 1
REPRESENT_MAX = 1 << 55

# largest i with i(i+1)/2 <= INT64_MAX
_TRI_INDEX_MAX = (math.isqrt(8 * INT64_MAX + 1) - 1) // 2


class WidthError(OverflowError):
    """Input or result outside the supported 64-bit range."""


def _check_natural(m: int, what: str = "value") -> int:
    if m < 0:
        raise ValueError(f"{what} must be >= 0, got {m}")
    if m > INT64_MAX:
        raise WidthError(f"{what} {m} exceeds the 64-bit ceiling")
    return m


def triangular(i: int) -> int:
    """i(i+1)/2 for any sign of i; always >= 0 and symmetric under i -> -i-1."""
    if not -_TRI_INDEX_MAX - 1 <= i <= _TRI_INDEX_MAX:
        raise WidthError(f"triangular index {i} overflows 64 bits")
    return i * (i + 1) // 2


def isqrt(m: int) -> int:
    """floor(sqrt(m)); the result r satisfies r*r <= m < (r+1)*(r+1)."""
    _check_natural(m)
    return math.isqrt(m)


def is_square(m: int) -> bool:
    _check_natural(m)
    r = math.isqrt(m)
    return r * r == m


def strip_fours(m: int) -> tuple[int, int]:
    """Write m = 4**k * core with core not divisible by 4; returns (k, core)."""
    _check_natural(m)
    if m == 0:
        raise ValueError("strip_fours requires m >= 1")
    k = 0
    while m % 4 == 0:
        m //= 4
        k += 1
    return k, m


def is_three_square_feasible(m: int) -> bool:
    """True iff m is a sum of three integer squares.

    By the Gauss-Legendre three-square theorem this fails exactly for the
    numbers 4**k * (8l + 7); zero is feasible as 0+0+0.
    """
    _check_natural(m)
    if m == 0:
        return True
    _, core = strip_fours(m)
    return core % 8 != 7
