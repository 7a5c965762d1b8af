"""Exact integer predicates for the square-root and log thresholds.

The procedures compare integers against quantities like a*sqrt(m)/b or
log2(m)/4 without any floating point, so threshold decisions (budgets,
peeling stops, admissible r) are reproducible and never suffer rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def leq_scaled_sqrt(x: int, a: int, b: int, m: int) -> bool:
    """x <= (a/b) * sqrt(m), exactly.  Requires a, b > 0 and m >= 0."""
    if x <= 0:
        return True
    return (x * b) ** 2 <= a * a * m


def geq_scaled_sqrt(x: int, a: int, b: int, m: int) -> bool:
    """x >= (a/b) * sqrt(m), exactly."""
    if x < 0:
        return False
    return (x * b) ** 2 >= a * a * m


def floor_scaled_sqrt(a: int, b: int, m: int) -> int:
    """floor((a/b) * sqrt(m)) for a, b > 0, m >= 0."""
    return isqrt(a * a * m) // b if b == 1 else _floor_general(a, b, m)


def _floor_general(a: int, b: int, m: int) -> int:
    # floor(a*sqrt(m)/b): start near and fix up with the exact predicate
    guess = isqrt(a * a * m) // b
    while not leq_scaled_sqrt(guess, a, b, m):
        guess -= 1
    while leq_scaled_sqrt(guess + 1, a, b, m):
        guess += 1
    return guess


def ceil_scaled_sqrt(a: int, b: int, m: int) -> int:
    """ceil((a/b) * sqrt(m)) for a, b > 0, m >= 0."""
    f = floor_scaled_sqrt(a, b, m)
    return f if (f * b) ** 2 == a * a * m else f + 1


def ceil_frac_sqrt(coef: Fraction, m: int) -> int:
    return ceil_scaled_sqrt(coef.numerator, coef.denominator, m)


def floor_frac_sqrt(coef: Fraction, m: int) -> int:
    return floor_scaled_sqrt(coef.numerator, coef.denominator, m)


def lt_quarter_log2(r: int, m: int) -> bool:
    """r < log2(m)/4, exactly (i.e. 2^(4r) < m)."""
    return (1 << (4 * r)) < m if r >= 0 else True


def leq_m_three_halves_minus(s: int, m: int, c: int) -> int:
    """s <= m^(3/2) - c*sqrt(m), exactly; both sides via (m - c)*sqrt(m)."""
    # m^{3/2} - c sqrt(m) = (m - c) sqrt(m)
    if m < c:
        return s <= 0 and (m - c) >= 0
    return leq_scaled_sqrt(s, m - c, 1, m)


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    r = isqrt(m)
    return r * r == m


def icbrt(m: int) -> int:
    """Integer cube root (floor) for m >= 0."""
    if m < 0:
        raise ValueError("icbrt of negative")
    if m == 0:
        return 0
    x = int(round(m ** (1 / 3)))
    while x ** 3 > m:
        x -= 1
    while (x + 1) ** 3 <= m:
        x += 1
    return x


def is_perfect_cube(m: int) -> bool:
    r = icbrt(m)
    return r ** 3 == m
