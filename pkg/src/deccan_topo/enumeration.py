"""
The fixed enumeration of the rationals and the summable length sequence.

``q_1 = 0`` and for ``k >= 1``: ``q_{2k} = c_k``, ``q_{2k+1} = -c_k`` where
``c_k`` walks the Calkin-Wilf tree in breadth-first order (1, 1/2, 2, 1/3, 3/2,
...). Lengths are geometric: ``s_i = a * 2**-i`` with exact sum ``a``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError
from .exact import Interval, RationalLike

logger = logging.getLogger(__name__)

CALKIN_WILF_SIGNED = "calkin-wilf-signed"
GEOMETRIC = "geometric"
CENTERED = "centered"


@lru_cache(maxsize=65536)
def calkin_wilf(k: int) -> Fraction:
    """The k-th positive rational in Calkin-Wilf order (k >= 1)."""
    a, b = 1, 1
    # Bits after the leading one: 0 -> left child a/(a+b), 1 -> right (a+b)/b.
    for bit in bin(k)[3:]:
        if bit == "0":
            b = a + b
        else:
            a = a + b
    return Fraction(a, b)


def calkin_wilf_index(q: Fraction) -> int:
    """Inverse of :func:`calkin_wilf` for a positive rational."""
    a, b = q.numerator, q.denominator
    runs: list[str] = []
    while a != b:
        if a < b:
            steps = (b - 1) // a
            b -= steps * a
            runs.append("0" * steps)
        else:
            steps = (a - 1) // b
            a -= steps * b
            runs.append("1" * steps)
    return int("1" + "".join(reversed(runs)), 2)


def _signed_enumerate(i: int) -> Fraction:
    if i == 1:
        return Fraction(0)
    c = calkin_wilf(i // 2)
    return c if i % 2 == 0 else -c


def _signed_index(q: Fraction) -> int:
    if q == 0:
        return 1
    k = calkin_wilf_index(abs(q))
    return 2 * k if q > 0 else 2 * k + 1


_ENUMERATIONS = {
    CALKIN_WILF_SIGNED: (_signed_enumerate, _signed_index),
}


@dataclass(frozen=True)
class RationalEnumeration:
    """A bijection from the positive integers onto the rationals."""

    scheme: str = CALKIN_WILF_SIGNED

    def __post_init__(self) -> None:
        if self.scheme not in _ENUMERATIONS:
            raise PreconditionError(f"unknown enumeration scheme {self.scheme!r}")

    def enumerate(self, i: int) -> Fraction:
        if i < 1:
            raise PreconditionError(f"enumeration index must be >= 1, got {i}")
        return _ENUMERATIONS[self.scheme][0](i)

    def index_of(self, q: RationalLike) -> int:
        return _ENUMERATIONS[self.scheme][1](Fraction(q))


@dataclass(frozen=True)
class LengthSequence:
    """Positive lengths ``s_i`` with an exactly known finite sum."""

    scale: Fraction = Fraction(1)
    rule: str = GEOMETRIC

    def __post_init__(self) -> None:
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.rule != GEOMETRIC:
            raise PreconditionError(f"unknown length rule {self.rule!r}")
        if self.scale <= 0:
            raise PreconditionError(f"total length must be positive, got {self.scale}")

    @property
    def total(self) -> Fraction:
        return self.scale

    def length(self, i: int) -> Fraction:
        if i < 1:
            raise PreconditionError(f"length index must be >= 1, got {i}")
        return self.scale / (1 << i)

    def partial_sum(self, n: int) -> Fraction:
        """``s_1 + ... + s_n = a(1 - 2**-n)``."""
        return self.scale - self.tail(n)

    def tail(self, n: int) -> Fraction:
        """``sum_{i > n} s_i = a * 2**-n``."""
        return self.scale / (1 << n)

    @property
    def rule_id(self) -> str:
        return f"{self.rule}(a={self.scale})"


@dataclass(frozen=True)
class FamilyDescriptor:
    """The countable family ``U_i = (q_i - s_i/2, q_i + s_i/2)``."""

    enumeration: RationalEnumeration = field(default_factory=RationalEnumeration)
    lengths: LengthSequence = field(default_factory=LengthSequence)
    shape: str = CENTERED

    def __post_init__(self) -> None:
        if self.shape != CENTERED:
            raise PreconditionError(f"unknown family shape {self.shape!r}")

    @property
    def family_id(self) -> str:
        return f"{self.enumeration.scheme}/{self.lengths.rule_id}/{self.shape}"

    def member_interval(self, i: int) -> Interval:
        center = self.enumeration.enumerate(i)
        half = self.lengths.length(i) / 2
        return Interval.of(center - half, center + half)

    def prefix(self, n: int) -> list[Interval]:
        """The first n member intervals."""
        logger.debug("materializing %d members of %s", n, self.family_id)
        return [self.member_interval(i) for i in range(1, n + 1)]
