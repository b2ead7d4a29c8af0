"""Rational enclosures of square roots, for sound one-sided bounds."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

PRECISION_BITS = 96


def exact_sqrt(x: Fraction) -> Fraction | None:
    """The rational square root of x if it has one, else None."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative argument")
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def sqrt_bounds(x: Fraction, bits: int = PRECISION_BITS) -> tuple[Fraction, Fraction]:
    """``(lo, hi)`` rationals with ``lo <= sqrt(x) <= hi`` and ``hi - lo <= 2**-bits``.

    Exact roots return ``(r, r)``.
    """
    x = Fraction(x)
    r = exact_sqrt(x)
    if r is not None:
        return r, r
    scale = 1 << bits
    # sqrt(p/q) = sqrt(p q) / q
    p, q = x.numerator, x.denominator
    s = isqrt(p * q * scale * scale)
    return Fraction(s, q * scale), Fraction(s + 1, q * scale)


def sqrt_lower(x: Fraction, bits: int = PRECISION_BITS) -> Fraction:
    return sqrt_bounds(x, bits)[0]


def sqrt_upper(x: Fraction, bits: int = PRECISION_BITS) -> Fraction:
    return sqrt_bounds(x, bits)[1]


class Interval:
    """Closed rational interval with outward-correct arithmetic (no floats)."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        self.lo = Fraction(lo)
        self.hi = Fraction(lo if hi is None else hi)
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @staticmethod
    def _coerce(x) -> Interval:
        return x if isinstance(x, Interval) else Interval(x)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        prods = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval divisor contains 0")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        out = Interval(1)
        for _ in range(k):
            out = out * self
        return out

    def sqrt(self, bits: int = PRECISION_BITS) -> Interval:
        if self.lo < 0:
            raise ValueError("sqrt of interval with negative part")
        return Interval(sqrt_lower(self.lo, bits), sqrt_upper(self.hi, bits))

    def __contains__(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self):
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        return f"Interval({float(self.lo)!r}, {float(self.hi)!r})"
