"""Exact radicals of rationals: either the root exists in Q or we say so."""
from __future__ import annotations

import math
from fractions import Fraction

from .unipoly import Rat, _as_fraction


def int_nth_root(n: int, k: int) -> int | None:
    """The exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))  # float seed only; verified exactly below
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def rational_nth_root(c: Rat, k: int) -> Fraction | None:
    """The exact k-th root of c in Q, or None.

    For odd k a negative radicand yields the negative root; for even k it
    yields None.
    """
    c = _as_fraction(c)
    if k < 1:
        raise ValueError("root index must be positive")
    sign = 1
    if c < 0:
        if k % 2 == 0:
            return None
        sign, c = -1, -c
    num = int_nth_root(c.numerator, k)
    den = int_nth_root(c.denominator, k)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def rational_sqrt(c: Rat) -> Fraction | None:
    """The nonnegative rational square root of c, or None."""
    c = _as_fraction(c)
    if c < 0:
        return None
    num, den = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if num * num != c.numerator or den * den != c.denominator:
        return None
    return Fraction(num, den)
