"""Exact scalars of the form a + b*sqrt(2), plus simplest-rational search.

These are the coordinate values of the vector module.  Rationality is
decidable (b == 0), and every comparison reduces to integer arithmetic via
the sign of a^2 - 2*b^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ValidationError

# rational upper bound for sqrt(2), off by < 2e-12; used only to seed floor()
_SQRT2_HI = Fraction(665857, 470832)

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class Coordinate:
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.a, Fraction) or not isinstance(self.b, Fraction):
            raise ValidationError("coordinate parts must be Fractions")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a^2 against 2 b^2 (equality would make sqrt(2) rational)
        t = a * a - 2 * b * b
        if a > 0:
            return 1 if t > 0 else -1
        return -1 if t > 0 else 1

    def __add__(self, other: "Coordinate") -> "Coordinate":
        return Coordinate(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Coordinate") -> "Coordinate":
        return Coordinate(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Coordinate":
        return Coordinate(-self.a, -self.b)

    def scaled(self, q: Rat) -> "Coordinate":
        q = Fraction(q)
        return Coordinate(self.a * q, self.b * q)

    def inverse(self) -> "Coordinate":
        if self.sign() == 0:
            raise ZeroDivisionError("coordinate is zero")
        n = self.a * self.a - 2 * self.b * self.b
        return Coordinate(self.a / n, -self.b / n)

    def _cmp(self, other: "Coordinate") -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def floor(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        n = math.floor(self.a + self.b * _SQRT2_HI)
        while coord(n) > self:
            n -= 1
        while coord(n + 1) <= self:
            n += 1
        return n

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        r2 = f"{abs(self.b)}*r2"
        if self.a == 0:
            return f"{self.b}*r2"
        return f"{self.a}+{r2}" if self.b > 0 else f"{self.a}-{r2}"


def coord(x, b: Rat = 0) -> Coordinate:
    """Coerce ints/Fractions (optionally with a sqrt(2) part) to a Coordinate."""
    if isinstance(x, Coordinate):
        if b:
            raise ValidationError("cannot add a sqrt(2) part to a Coordinate")
        return x
    return Coordinate(Fraction(x), Fraction(b))


ZERO_COORD = Coordinate(Fraction(0))
SQRT2 = Coordinate(Fraction(0), Fraction(1))


def _complexity(q: Fraction) -> tuple[int, int]:
    return (q.denominator, abs(q.numerator))


def simplest_between(lo: Coordinate, hi: Coordinate, include_hi: bool = False) -> Fraction:
    """The lowest-complexity rational in the open interval (lo, hi).

    With include_hi, a rational hi itself competes as a candidate.  Ties in
    (denominator, |numerator|) cannot occur between distinct candidates of
    minimal denominator inside one interval of length < 1, and across the
    integer case the interior winner is unique, so the result is
    deterministic.
    """
    if not lo < hi:
        raise ValidationError("interval is empty")
    best = _sb_open(lo, hi)
    if include_hi and hi.is_rational and _complexity(hi.a) < _complexity(best):
        best = hi.a
    return best


def _sb_open(lo: Coordinate, hi: Coordinate) -> Fraction:
    if lo.sign() < 0 and hi.sign() > 0:
        return Fraction(0)
    if hi.sign() <= 0:
        return -_sb_open(-hi, -lo)
    # lo >= 0 here
    fl = lo.floor()
    cand = fl + 1
    if coord(cand) < hi:
        return Fraction(cand)
    lo2 = lo - coord(fl)
    hi2 = hi - coord(fl)
    # (lo2, hi2) is contained in (0, 1]; invert into (1/hi2, 1/lo2)
    if lo2.sign() == 0:
        s = Fraction(hi2.inverse().floor() + 1)
    else:
        s = _sb_open(hi2.inverse(), lo2.inverse())
    return fl + 1 / s


def mediant(lo: Fraction, hi: Fraction) -> Fraction:
    return Fraction(lo.numerator + hi.numerator, lo.denominator + hi.denominator)


def rising_rationals(limit: Coordinate, n: int) -> list[Fraction]:
    """A strictly increasing run of n rationals converging up to an irrational limit.

    Walks the mediant tree below the fractional bracket of the limit,
    recording every improvement of the lower endpoint.
    """
    if limit.is_rational:
        raise ValidationError("limit must be irrational")
    if n < 1:
        raise ValidationError("need n >= 1")
    lo = Fraction(limit.floor())
    hi = lo + 1
    out = [lo]
    while len(out) < n:
        m = mediant(lo, hi)
        if coord(m) < limit:
            lo = m
            out.append(m)
        else:
            hi = m
    return out[:n]
