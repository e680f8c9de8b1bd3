"""
Exact numbers on the real line.

Everything here is exact: rationals are ``fractions.Fraction`` (always in lowest
terms with a positive denominator), irrational points are quadratic surds
``p + c*sqrt(d)``, and every order comparison between them is decided without
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import PreconditionError

RationalLike = Union[int, Fraction]


def _sign(value: RationalLike) -> int:
    return (value > 0) - (value < 0)


def _sign_plus_sqrt(a: Fraction, b: Fraction, m: int) -> int:
    """Sign of ``a + b*sqrt(m)`` for rationals a, b and a positive integer m."""
    root = math.isqrt(m)
    if root * root == m:
        return _sign(a + b * root)
    sa, sb = _sign(a), _sign(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # a and b*sqrt(m) have opposite signs; a*a == b*b*m is impossible for
    # non-square m, so the larger magnitude wins.
    return sa if a * a > b * b * m else sb


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n == k*k*m`` and m square-free."""
    if n <= 0:
        raise PreconditionError(f"radicand must be positive, got {n}")
    k, m = 1, n
    f = 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            k *= f
        f += 1
    return k, m


@total_ordering
@dataclass(frozen=True)
class ExtRational:
    """A rational number or one of the two infinities.

    ``infinity`` is -1 for -inf, +1 for +inf and 0 for a finite value.
    """

    value: Fraction = Fraction(0)
    infinity: int = 0

    @classmethod
    def of(cls, value: RationalLike | ExtRational) -> ExtRational:
        if isinstance(value, ExtRational):
            return value
        return cls(Fraction(value))

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    def _key(self) -> tuple[int, Fraction]:
        return (self.infinity, self.value)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExtRational):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, other: ExtRational) -> ExtRational:
        if self.infinity and other.infinity and self.infinity != other.infinity:
            raise PreconditionError("inf - inf is undefined")
        if self.infinity or other.infinity:
            return self if self.infinity else other
        return ExtRational(self.value + other.value)

    def __neg__(self) -> ExtRational:
        return ExtRational(-self.value, -self.infinity)

    def __sub__(self, other: ExtRational) -> ExtRational:
        return self + (-other)

    def __str__(self) -> str:
        if self.infinity:
            return "inf" if self.infinity > 0 else "-inf"
        return str(self.value)


NEG_INF = ExtRational(Fraction(0), -1)
POS_INF = ExtRational(Fraction(0), 1)
ZERO = ExtRational(Fraction(0))


def ext_min(a: ExtRational, b: ExtRational) -> ExtRational:
    return a if a <= b else b


def ext_max(a: ExtRational, b: ExtRational) -> ExtRational:
    return a if a >= b else b


@total_ordering
@dataclass(frozen=True)
class Point:
    """A real number ``p + c*sqrt(d)``.

    Rational points have ``c == 0`` and ``d == 1``. Quadratic surds have
    ``c != 0`` and a square-free ``d > 1``, so they are irrational and the
    representation is unique: structural equality is numeric equality.
    """

    p: Fraction
    c: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c == 0:
            if self.d != 1:
                raise PreconditionError("a rational point must have d == 1")
            return
        if self.d <= 1 or squarefree_split(self.d) != (1, self.d):
            msg = f"surd radicand must be square-free and > 1, got {self.d}"
            raise PreconditionError(msg)

    @classmethod
    def rational(cls, q: RationalLike) -> Point:
        return cls(Fraction(q))

    @classmethod
    def surd(cls, p: RationalLike, c: RationalLike, d: int) -> Point:
        """Build ``p + c*sqrt(d)``, pulling square factors out of d."""
        k, m = squarefree_split(d)
        c = Fraction(c) * k
        if m == 1 or c == 0:
            return cls(Fraction(p) + c)
        return cls(Fraction(p), c, m)

    @property
    def is_rational(self) -> bool:
        return self.c == 0

    def compare(self, other: Point | RationalLike) -> int:
        """Return the sign of ``self - other``, decided exactly."""
        if not isinstance(other, Point):
            other = Point(Fraction(other))
        u = self.p - other.p
        if other.c == 0:
            return _sign_plus_sqrt(u, self.c, self.d) if self.c else _sign(u)
        if self.c == 0:
            return _sign_plus_sqrt(u, -other.c, other.d)
        if self.d == other.d:
            return _sign_plus_sqrt(u, self.c - other.c, self.d)
        # v = c1*sqrt(d1) - c2*sqrt(d2) is never zero for distinct square-free
        # radicands.
        c1, d1, c2, d2 = self.c, self.d, other.c, other.d
        s1, s2 = _sign(c1), _sign(c2)
        if s1 != s2:
            sv = 1 if s1 > s2 else -1
        else:
            sv = s1 * _sign(c1 * c1 * d1 - c2 * c2 * d2)
        su = _sign(u)
        if su == 0 or su == sv:
            return sv
        # |u| vs |v|: u^2 - v^2 = (u^2 - c1^2 d1 - c2^2 d2) + 2 c1 c2 sqrt(d1 d2)
        t = _sign_plus_sqrt(u * u - c1 * c1 * d1 - c2 * c2 * d2, 2 * c1 * c2, d1 * d2)
        return su if t > 0 else sv

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, (Point, int, Fraction)):
            return NotImplemented
        return self.compare(other) < 0

    def bracket(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational lower and upper bounds, tight to about ``|c| * 2**-bits``."""
        if self.c == 0:
            return self.p, self.p
        scale = 1 << bits
        root = math.isqrt(self.d * scale * scale)
        lo, hi = Fraction(root, scale), Fraction(root + 1, scale)
        if self.c > 0:
            return self.p + self.c * lo, self.p + self.c * hi
        return self.p + self.c * hi, self.p + self.c * lo

    def __str__(self) -> str:
        if self.c == 0:
            return str(self.p)
        coeff = abs(self.c)
        surd = f"sqrt({self.d})" if coeff == 1 else f"{coeff}*sqrt({self.d})"
        if self.p == 0:
            return surd if self.c > 0 else f"-{surd}"
        return f"{self.p} {'+' if self.c > 0 else '-'} {surd}"


def ext_compare(e: ExtRational, x: Point) -> int:
    """Sign of ``e - x``."""
    if e.infinity:
        return e.infinity
    if x.c == 0:
        return _sign(e.value - x.p)
    return -x.compare(e.value)


@dataclass(frozen=True)
class Interval:
    """The open interval ``(lo, hi)``; empty when ``lo >= hi``."""

    lo: ExtRational
    hi: ExtRational

    @classmethod
    def of(
        cls, lo: RationalLike | ExtRational, hi: RationalLike | ExtRational
    ) -> Interval:
        return cls(ExtRational.of(lo), ExtRational.of(hi))

    @property
    def is_empty(self) -> bool:
        return self.lo >= self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo.is_finite and self.hi.is_finite

    @property
    def length(self) -> ExtRational:
        if self.is_empty:
            return ZERO
        return self.hi - self.lo

    def contains(self, x: Point) -> bool:
        return ext_compare(self.lo, x) < 0 and ext_compare(self.hi, x) > 0

    def intersect(self, other: Interval) -> Interval:
        return Interval(ext_max(self.lo, other.lo), ext_min(self.hi, other.hi))

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator (then numerator) in ``(lo, hi)``."""
    if lo >= hi:
        raise PreconditionError(f"empty interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    floor = math.floor(lo)
    if floor + 1 < hi:
        return Fraction(floor + 1)
    # lo and hi share the integer part: recurse on the reciprocals.
    if lo == floor:
        return floor + Fraction(1, math.floor(1 / (hi - floor)) + 1)
    return floor + 1 / simplest_between(1 / (hi - floor), 1 / (lo - floor))


def simplest_in(interval: Interval) -> Fraction:
    """The simplest rational inside a nonempty open interval."""
    if interval.is_empty:
        raise PreconditionError(f"empty interval {interval}")
    lo, hi = interval.lo, interval.hi
    if lo.is_finite and hi.is_finite:
        return simplest_between(lo.value, hi.value)
    if not lo.is_finite and not hi.is_finite:
        return Fraction(0)
    if not lo.is_finite:
        return Fraction(0) if hi.value > 0 else Fraction(math.ceil(hi.value) - 1)
    return Fraction(0) if lo.value < 0 else Fraction(math.floor(lo.value) + 1)


def rational_between(x: Point, y: Point) -> Fraction:
    """A rational strictly between two points ``x < y``."""
    if x.compare(y) >= 0:
        raise PreconditionError(f"{x} is not below {y}")
    bits = 8
    while True:
        _, x_hi = x.bracket(bits)
        y_lo, _ = y.bracket(bits)
        if x_hi < y_lo:
            return simplest_between(x_hi, y_lo)
        bits *= 2
