"""Deterministic decomposition of a natural number into three squares.

The Gauss-Legendre theorem guarantees a decomposition exists unless the
input has the shape 4**k * (8l + 7); the classifier gates entry, so the
search below never spins on an infeasible input.  The search order is part
of the contract: the leading square is taken as large as possible, then the
middle one, which makes repeated calls return the identical triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import _check_natural, is_three_square_feasible

# squares hit only 44 residues mod 256; cheap filter ahead of the exact check
_SQUARE_MOD256 = bytearray(256)
for _r in range(256):
    _SQUARE_MOD256[(_r * _r) & 255] = 1


class NotRepresentableError(ValueError):
    """The number is of the excluded 4**k (8l+7) shape."""


@dataclass(frozen=True)
class ThreeSquareRep:
    """m = x*x + y*y + z*z with x >= y >= z >= 0."""

    m: int
    x: int
    y: int
    z: int


def two_squares(m: int) -> tuple[int, int] | None:
    """m = a*a + b*b with a >= b >= 0 and a maximal, or None if impossible."""
    _check_natural(m)
    a = isqrt(m)
    while 2 * a * a >= m:
        b2 = m - a * a
        if _SQUARE_MOD256[b2 & 255]:
            b = isqrt(b2)
            if b * b == b2:
                return a, b
        a -= 1
    return None


def three_squares(m: int) -> ThreeSquareRep:
    """Canonical three-square decomposition of m.

    Scans the leading square x downward from isqrt(m) and accepts the first
    x whose remainder splits into two squares b <= a <= x, so the result is
    the lexicographically greatest ordered triple.

    Raises NotRepresentableError iff is_three_square_feasible(m) is false.
    """
    if not is_three_square_feasible(m):
        raise NotRepresentableError(f"{m} = 4^k(8l+7) is not a sum of three squares")
    x = isqrt(m)
    while x >= 0:
        rem = m - x * x
        # sums of two squares never land on 3, 6 or 7 mod 8
        if rem & 7 not in (3, 6, 7):
            pair = two_squares(rem)
            if pair is not None and pair[0] <= x:
                return ThreeSquareRep(m, x, pair[0], pair[1])
        x -= 1
    raise AssertionError(f"search exhausted for feasible {m}")
