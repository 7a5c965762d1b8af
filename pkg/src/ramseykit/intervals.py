"""Sound interval arithmetic with outward rounding, on top of MPFR.

Every operation computes its lower endpoint rounding toward -inf and its
upper endpoint rounding toward +inf, so the true real value always stays
inside [lo, hi].  Comparisons are three-valued: True / False / None
(indecisive); callers widen precision on None and give up with a
PrecisionError at the configured cap, never guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import gmpy2
from gmpy2 import mpfr

DEFAULT_PRECISIONS = (64, 128, 256, 512)


class PrecisionError(Exception):
    """A comparison stayed indecisive at the maximum allowed precision."""


class Indecisive(Exception):
    """Internal: retry the enclosing computation at higher precision."""

    def __init__(self, what: str = ""):
        super().__init__(what)
        self.what = what


def _down(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundDown)


def _up(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundUp)


def mpfr_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpfr."""
    mant, exp = x.as_mantissa_exp()
    return Fraction(int(mant)) * Fraction(2) ** int(exp)


@dataclass(frozen=True)
class RInterval:
    """A closed interval [lo, hi] of mpfr endpoints enclosing a real value."""

    lo: mpfr
    hi: mpfr
    prec: int

    def __post_init__(self):
        if gmpy2.is_nan(self.lo) or gmpy2.is_nan(self.hi) or self.lo > self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    # --- constructors ---

    @staticmethod
    def exact(value: int | Fraction, prec: int) -> "RInterval":
        with _down(prec):
            lo = mpfr(value)
        with _up(prec):
            hi = mpfr(value)
        return RInterval(lo, hi, prec)

    @staticmethod
    def point(value, prec: int) -> "RInterval":
        return RInterval(value, value, prec)

    # --- queries ---

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def as_fractions(self) -> tuple[Fraction, Fraction]:
        return mpfr_to_fraction(self.lo), mpfr_to_fraction(self.hi)

    def contains(self, value: int | Fraction) -> bool:
        flo, fhi = self.as_fractions()
        return flo <= value <= fhi

    # --- arithmetic (outward rounding) ---

    def __add__(self, other: "RInterval") -> "RInterval":
        p = max(self.prec, other.prec)
        with _down(p):
            lo = self.lo + other.lo
        with _up(p):
            hi = self.hi + other.hi
        return RInterval(lo, hi, p)

    def __neg__(self) -> "RInterval":
        return RInterval(-self.hi, -self.lo, self.prec)

    def __sub__(self, other: "RInterval") -> "RInterval":
        return self + (-other)

    def __mul__(self, other: "RInterval") -> "RInterval":
        p = max(self.prec, other.prec)
        pairs = ((self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi))
        with _down(p):
            lo = min(a * b for a, b in pairs)
        with _up(p):
            hi = max(a * b for a, b in pairs)
        return RInterval(lo, hi, p)

    def __truediv__(self, other: "RInterval") -> "RInterval":
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval denominator straddles zero")
        p = max(self.prec, other.prec)
        pairs = ((self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi))
        with _down(p):
            lo = min(a / b for a, b in pairs)
        with _up(p):
            hi = max(a / b for a, b in pairs)
        return RInterval(lo, hi, p)

    def scale(self, k: int | Fraction) -> "RInterval":
        return self * RInterval.exact(k, self.prec)

    def _mono(self, fn: Callable) -> "RInterval":
        with _down(self.prec):
            lo = fn(self.lo)
        with _up(self.prec):
            hi = fn(self.hi)
        return RInterval(lo, hi, self.prec)

    def sqrt(self) -> "RInterval":
        if self.lo < 0:
            raise ValueError("sqrt of a possibly-negative interval")
        return self._mono(gmpy2.sqrt)

    def cbrt(self) -> "RInterval":
        return self._mono(gmpy2.cbrt)

    def log2(self) -> "RInterval":
        if self.lo <= 0:
            raise ValueError("log2 of a possibly-nonpositive interval")
        return self._mono(gmpy2.log2)

    def log(self) -> "RInterval":
        if self.lo <= 0:
            raise ValueError("log of a possibly-nonpositive interval")
        return self._mono(gmpy2.log)

    def exp2(self) -> "RInterval":
        return self._mono(gmpy2.exp2)

    def cube(self) -> "RInterval":
        return self * self * self

    def pow_int(self, k: int) -> "RInterval":
        if k < 0:
            raise ValueError("negative powers unsupported; divide instead")
        out = RInterval.exact(1, self.prec)
        for _ in range(k):
            out = out * self
        return out

    # --- three-valued comparisons ---

    def leq(self, other: "RInterval") -> Optional[bool]:
        if self.hi <= other.lo:
            return True
        if self.lo > other.hi:
            return False
        return None

    def lt(self, other: "RInterval") -> Optional[bool]:
        if self.hi < other.lo:
            return True
        if self.lo >= other.hi:
            return False
        return None

    def geq(self, other: "RInterval") -> Optional[bool]:
        return other.leq(self)

    def gt(self, other: "RInterval") -> Optional[bool]:
        return other.lt(self)

    def __repr__(self) -> str:
        return f"RInterval[{self.lo}, {self.hi}]@{self.prec}"


def sqrt_int(m: int, prec: int) -> RInterval:
    """Interval for sqrt(m); exact when m is a perfect square."""
    return RInterval.exact(m, prec).sqrt()


def log2_int(m: int, prec: int) -> RInterval:
    """Interval for log2(m); exact when m is a power of two."""
    if m <= 0:
        raise ValueError("log2 of nonpositive integer")
    if m & (m - 1) == 0:
        return RInterval.exact(m.bit_length() - 1, prec)
    return RInterval.exact(m, prec).log2()


def must(tri: Optional[bool], what: str = "") -> bool:
    """Unwrap a three-valued comparison, escalating indecision."""
    if tri is None:
        raise Indecisive(what)
    return tri


def resolve(build: Callable[[int], object],
            precisions: tuple[int, ...] = DEFAULT_PRECISIONS):
    """Run `build(prec)` with increasing precision until it is decisive.

    `build` raises Indecisive (usually via `must`) when an interval
    comparison cannot be decided at the current precision.  Widening never
    flips a decision: intervals only shrink as precision grows.
    """
    last = None
    for prec in precisions:
        try:
            return build(prec)
        except Indecisive as e:
            last = e
    raise PrecisionError(
        f"comparison {last.what!r} indecisive at {precisions[-1]} bits"
        if last else f"indecisive at {precisions[-1]} bits")


# --- LogQty: quantities tracked by an interval around their log2 -------------

@dataclass(frozen=True)
class LogQty:
    """A positive quantity represented by bounds on its log2."""

    exponent: RInterval

    @property
    def prec(self) -> int:
        return self.exponent.prec

    @property
    def is_exact(self) -> bool:
        return self.exponent.is_exact

    @staticmethod
    def from_exponent(e: RInterval | int | Fraction, prec: int = 128) -> "LogQty":
        if isinstance(e, RInterval):
            return LogQty(e)
        return LogQty(RInterval.exact(e, prec))

    @staticmethod
    def from_integer(v: int, prec: int = 128) -> "LogQty":
        return LogQty(log2_int(v, prec))

    @staticmethod
    def from_fraction(v: Fraction, prec: int = 128) -> "LogQty":
        if v <= 0:
            raise ValueError("LogQty requires a positive value")
        num = log2_int(v.numerator, prec)
        den = log2_int(v.denominator, prec)
        return LogQty(num - den)

    def __mul__(self, other: "LogQty") -> "LogQty":
        return LogQty(self.exponent + other.exponent)

    def __truediv__(self, other: "LogQty") -> "LogQty":
        return LogQty(self.exponent - other.exponent)

    def pow(self, k: int | Fraction) -> "LogQty":
        return LogQty(self.exponent.scale(k))

    def leq(self, other: "LogQty") -> Optional[bool]:
        return self.exponent.leq(other.exponent)

    def lt(self, other: "LogQty") -> Optional[bool]:
        return self.exponent.lt(other.exponent)

    def geq_value(self, v: int) -> Optional[bool]:
        """Compare against a plain integer value (not an exponent)."""
        return LogQty.from_integer(v, self.prec).leq(self)

    def __repr__(self) -> str:
        return f"LogQty(2^{self.exponent!r})"


# --- decimal rendering --------------------------------------------------------

def fraction_to_decimal(fr: Fraction, digits: int, direction: str) -> str:
    """Directed decimal string with `digits` places after the point.

    direction 'down' rounds toward -inf, 'up' toward +inf, so a [lo, hi]
    pair keeps enclosing the true value after rendering.
    """
    scale = 10 ** digits
    scaled = fr * scale
    if direction == "down":
        units = scaled.numerator // scaled.denominator
    elif direction == "up":
        units = -((-scaled.numerator) // scaled.denominator)
    else:
        raise ValueError(f"bad direction {direction!r}")
    sign = "-" if units < 0 else ""
    units = abs(units)
    whole, frac = divmod(units, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def interval_to_decimals(iv: RInterval, digits: int = 30) -> tuple[str, str]:
    flo, fhi = iv.as_fractions()
    return (fraction_to_decimal(flo, digits, "down"),
            fraction_to_decimal(fhi, digits, "up"))


def logqty_to_dict(q: LogQty, digits: int = 30) -> dict:
    lo, hi = interval_to_decimals(q.exponent, digits)
    return {"log2_lo": lo, "log2_hi": hi, "precision": q.prec}
