"""
Symbolic subsets of the real line.

A :class:`SetExpr` is a finite expression tree over intervals, points, the
rationals, the irrationals, Boolean combinators and countable interval families.
Membership is three-valued: ``IN`` and ``OUT`` are exact, ``UNKNOWN`` only
arises from the truncation of a :class:`Family`.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .enumeration import FamilyDescriptor, LengthSequence
from .errors import PreconditionError, ShapeError
from .exact import (
    NEG_INF,
    POS_INF,
    ExtRational,
    Interval,
    Point,
    RationalLike,
    ext_max,
    rational_between,
    simplest_in,
)

logger = logging.getLogger(__name__)


class Truth(Enum):
    """Kleene three-valued truth."""

    IN = "in"
    OUT = "out"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> Truth:
        return cls.IN if flag else cls.OUT

    def __invert__(self) -> Truth:
        if self is Truth.IN:
            return Truth.OUT
        if self is Truth.OUT:
            return Truth.IN
        return self

    def __and__(self, other: Truth) -> Truth:
        if Truth.OUT in (self, other):
            return Truth.OUT
        if Truth.UNKNOWN in (self, other):
            return Truth.UNKNOWN
        return Truth.IN

    def __or__(self, other: Truth) -> Truth:
        if Truth.IN in (self, other):
            return Truth.IN
        if Truth.UNKNOWN in (self, other):
            return Truth.UNKNOWN
        return Truth.OUT


class SetExpr:
    """Base class of the expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(SetExpr):
    pass


@dataclass(frozen=True)
class Full(SetExpr):
    pass


@dataclass(frozen=True)
class Rationals(SetExpr):
    pass


@dataclass(frozen=True)
class Irrationals(SetExpr):
    pass


@dataclass(frozen=True)
class Ival(SetExpr):
    interval: Interval


@dataclass(frozen=True)
class Single(SetExpr):
    point: Point


@dataclass(frozen=True)
class FiniteUnion(SetExpr):
    parts: tuple[SetExpr, ...]


@dataclass(frozen=True)
class Intersection(SetExpr):
    parts: tuple[SetExpr, ...]


@dataclass(frozen=True)
class Complement(SetExpr):
    inner: SetExpr


@dataclass(frozen=True)
class Family(SetExpr):
    family: FamilyDescriptor


EMPTY = Empty()
FULL = Full()
RATIONALS = Rationals()
IRRATIONALS = Irrationals()


def ival(lo: RationalLike | ExtRational, hi: RationalLike | ExtRational) -> SetExpr:
    """The open interval ``(lo, hi)``, or EMPTY when ``lo >= hi``."""
    interval = Interval.of(lo, hi)
    if interval.is_empty:
        return EMPTY
    if not interval.lo.is_finite and not interval.hi.is_finite:
        return FULL
    return Ival(interval)


def single(x: Point | RationalLike) -> SetExpr:
    return Single(x if isinstance(x, Point) else Point.rational(x))


def _gather(kind: type, items: Iterable[SetExpr]) -> list[SetExpr]:
    out: list[SetExpr] = []
    for item in items:
        nested = (item,)
        if isinstance(item, kind):
            nested = item.parts  # type: ignore[attr-defined]
        for part in nested:
            if part not in out:
                out.append(part)
    return out


def union(*items: SetExpr) -> SetExpr:
    """Union with Empty/Full absorption, flattening and deduplication."""
    parts = [p for p in _gather(FiniteUnion, items) if p != EMPTY]
    if FULL in parts:
        return FULL
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return FiniteUnion(tuple(parts))


def intersect(*items: SetExpr) -> SetExpr:
    """Intersection with Empty/Full absorption, flattening and deduplication."""
    parts = [p for p in _gather(Intersection, items) if p != FULL]
    if EMPTY in parts:
        return EMPTY
    if not parts:
        return FULL
    if len(parts) == 1:
        return parts[0]
    return Intersection(tuple(parts))


def complement(s: SetExpr) -> SetExpr:
    """Complement with double-complement elimination."""
    if isinstance(s, Complement):
        return s.inner
    if s == EMPTY:
        return FULL
    if s == FULL:
        return EMPTY
    if s == RATIONALS:
        return IRRATIONALS
    if s == IRRATIONALS:
        return RATIONALS
    return Complement(s)


def build_paper_u(a: RationalLike = 1) -> Family:
    """The open cover ``U = union of U_i`` of the rationals with total length a."""
    a = Fraction(a)
    if a <= 0:
        raise PreconditionError(f"U needs a total length a > 0, got {a}")
    return Family(FamilyDescriptor(lengths=LengthSequence(a)))


def walk(s: SetExpr) -> Iterator[SetExpr]:
    """Pre-order traversal of an expression tree."""
    yield s
    if isinstance(s, (FiniteUnion, Intersection)):
        for part in s.parts:
            yield from walk(part)
    elif isinstance(s, Complement):
        yield from walk(s.inner)


# -- membership -------------------------------------------------------------


def check_truncation(truncation: int) -> None:
    if truncation < 1:
        raise PreconditionError(f"truncation must be >= 1, got {truncation}")


def _family_member(x: Point, family: FamilyDescriptor, truncation: int) -> Truth:
    # The enumeration is onto the rationals and U_i is centered on q_i.
    if x.is_rational:
        return Truth.IN
    for i in range(1, truncation + 1):
        if family.member_interval(i).contains(x):
            return Truth.IN
    return Truth.UNKNOWN


def member(x: Point | RationalLike, s: SetExpr, truncation: int = 1000) -> Truth:
    """Sound three-valued membership of x in s."""
    check_truncation(truncation)
    if not isinstance(x, Point):
        x = Point.rational(x)
    return _member(x, s, truncation)


def _member(x: Point, s: SetExpr, n: int) -> Truth:
    if isinstance(s, Empty):
        return Truth.OUT
    if isinstance(s, Full):
        return Truth.IN
    if isinstance(s, Ival):
        return Truth.of(s.interval.contains(x))
    if isinstance(s, Single):
        return Truth.of(s.point == x)
    if isinstance(s, Rationals):
        return Truth.of(x.is_rational)
    if isinstance(s, Irrationals):
        return Truth.of(not x.is_rational)
    if isinstance(s, FiniteUnion):
        result = Truth.OUT
        for part in s.parts:
            result = result | _member(x, part, n)
            if result is Truth.IN:
                break
        return result
    if isinstance(s, Intersection):
        result = Truth.IN
        for part in s.parts:
            result = result & _member(x, part, n)
            if result is Truth.OUT:
                break
        return result
    if isinstance(s, Complement):
        return ~_member(x, s.inner, n)
    if isinstance(s, Family):
        return _family_member(x, s.family, n)
    raise ShapeError(f"unsupported set node {type(s).__name__}")


# -- canonical interval sets --------------------------------------------------


@dataclass(frozen=True)
class CanonicalIntervalSet:
    """Sorted disjoint maximal open intervals plus isolated points."""

    intervals: tuple[Interval, ...] = ()
    points: tuple[Point, ...] = ()

    def contains(self, x: Point) -> bool:
        return x in self.points or any(iv.contains(x) for iv in self.intervals)

    def to_expr(self) -> SetExpr:
        return union(
            *(Ival(iv) for iv in self.intervals), *(Single(p) for p in self.points)
        )


def normalize(parts: Iterable[Interval]) -> CanonicalIntervalSet:
    """Merge open intervals into sorted, pairwise-disjoint, maximal intervals.

    Abutting intervals ``(a,b), (b,c)`` stay separate: b is in neither.
    """
    ordered = sorted((iv for iv in parts if not iv.is_empty), key=lambda iv: iv.lo)
    merged: list[Interval] = []
    for iv in ordered:
        if merged and iv.lo < merged[-1].hi:
            last = merged[-1]
            merged[-1] = Interval(last.lo, ext_max(last.hi, iv.hi))
        else:
            merged.append(iv)
    return CanonicalIntervalSet(tuple(merged))


def intersect_intervals(
    a: Sequence[Interval], b: Sequence[Interval]
) -> list[Interval]:
    """Intersection of two sorted disjoint interval lists."""
    out: list[Interval] = []
    i = j = 0
    while i < len(a) and j < len(b):
        piece = a[i].intersect(b[j])
        if not piece.is_empty:
            out.append(piece)
        if a[i].hi <= b[j].hi:
            i += 1
        else:
            j += 1
    return out


_FINITE_NODES = (Empty, Full, Ival, Single, FiniteUnion, Intersection, Complement)


def is_finite_fragment(s: SetExpr) -> bool:
    """True for finite Boolean combinations of intervals and points."""
    return all(isinstance(node, _FINITE_NODES) for node in walk(s))


def _breakpoints(s: SetExpr) -> list[Point]:
    found: list[Point] = []
    for node in walk(s):
        if isinstance(node, Ival):
            for end in (node.interval.lo, node.interval.hi):
                if end.is_finite:
                    found.append(Point.rational(end.value))
        elif isinstance(node, Single):
            found.append(node.point)
    found.sort()
    unique: list[Point] = []
    for p in found:
        if not unique or unique[-1] != p:
            unique.append(p)
    return unique


@dataclass(frozen=True)
class CellDecomposition:
    """The line cut at ``breakpoints``: ``len(breakpoints) + 1`` open segments.

    Segment k lies between breakpoints k-1 and k; ``samples[k]`` is a rational
    inside it. On each segment the set is constant.
    """

    breakpoints: tuple[Point, ...]
    point_inside: tuple[bool, ...]
    segment_inside: tuple[bool, ...]
    samples: tuple[Fraction, ...]


def cells(s: SetExpr) -> CellDecomposition:
    """Exact cell decomposition of a finite-fragment set."""
    if not is_finite_fragment(s):
        raise ShapeError("cell decomposition needs a finite Boolean combination")
    bps = _breakpoints(s)
    samples: list[Fraction] = []
    if not bps:
        samples.append(Fraction(0))
    else:
        samples.append(bps[0].bracket(8)[0] - 1)
        for left, right in zip(bps, bps[1:]):
            samples.append(rational_between(left, right))
        samples.append(bps[-1].bracket(8)[1] + 1)
    return CellDecomposition(
        breakpoints=tuple(bps),
        point_inside=tuple(_member(p, s, 1) is Truth.IN for p in bps),
        segment_inside=tuple(
            _member(Point.rational(q), s, 1) is Truth.IN for q in samples
        ),
        samples=tuple(samples),
    )


def _endpoint(p: Point) -> ExtRational:
    if not p.is_rational:
        msg = f"boundary point {p} is irrational; no rational-endpoint interval form"
        raise ShapeError(msg)
    return ExtRational(p.p)


def canonical_from_cells(cd: CellDecomposition) -> CanonicalIntervalSet:
    """Rebuild intervals and isolated points from a cell decomposition."""
    intervals: list[Interval] = []
    points: list[Point] = []
    bps = cd.breakpoints
    start: ExtRational | None = None
    for k, seg_in in enumerate(cd.segment_inside):
        if seg_in and start is None:
            start = NEG_INF if k == 0 else _endpoint(bps[k - 1])
        if k == len(bps):
            if start is not None:
                intervals.append(Interval(start, POS_INF))
            break
        bp, bp_in = bps[k], cd.point_inside[k]
        joined = seg_in and bp_in and cd.segment_inside[k + 1]
        if start is not None and not joined:
            intervals.append(Interval(start, _endpoint(bp)))
            start = None
        if bp_in and not joined:
            points.append(bp)
    return CanonicalIntervalSet(tuple(intervals), tuple(points))


def canonicalize(s: SetExpr) -> CanonicalIntervalSet:
    """Exact canonical form of a finite Boolean combination of intervals and points."""
    return canonical_from_cells(cells(s))


# -- decomposition of open sets ----------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """Maximal intervals of an open set with one distinct rational per interval."""

    canonical: CanonicalIntervalSet
    witnesses: tuple[Fraction, ...]
    truncation: int
    exact: bool


def _open_intervals(s: SetExpr, n: int) -> tuple[list[Interval], bool]:
    if isinstance(s, Empty):
        return [], True
    if isinstance(s, Full):
        return [Interval(NEG_INF, POS_INF)], True
    if isinstance(s, Ival):
        return [s.interval], True
    if isinstance(s, Family):
        return s.family.prefix(n), False
    if isinstance(s, FiniteUnion):
        collected: list[Interval] = []
        exact = True
        for part in s.parts:
            ivs, part_exact = _open_intervals(part, n)
            collected.extend(ivs)
            exact = exact and part_exact
        return collected, exact
    if isinstance(s, Intersection):
        current: list[Interval] | None = None
        exact = True
        for part in s.parts:
            ivs, part_exact = _open_intervals(part, n)
            merged = list(normalize(ivs).intervals)
            if current is not None:
                merged = intersect_intervals(current, merged)
            current = merged
            exact = exact and part_exact
        return current or [], exact
    msg = f"{type(s).__name__} is not a union of open intervals"
    raise ShapeError(msg)


def decompose_open(s: SetExpr, truncation: int = 1000) -> Decomposition:
    """Split an open-interval union into maximal intervals with rational witnesses."""
    check_truncation(truncation)
    ivs, exact = _open_intervals(s, truncation)
    canonical = normalize(ivs)
    witnesses = tuple(simplest_in(iv) for iv in canonical.intervals)
    return Decomposition(canonical, witnesses, truncation, exact)


def clip(intervals: Iterable[Interval], window: Interval) -> list[Interval]:
    """Intersect each interval with a window, dropping empty pieces."""
    pieces = (iv.intersect(window) for iv in intervals)
    return [piece for piece in pieces if not piece.is_empty]
