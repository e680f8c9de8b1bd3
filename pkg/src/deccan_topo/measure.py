"""
Lebesgue measure: exact for finite interval sets, certified two-sided bounds for
countable families.

For a family truncated at N the lower bound is the measure of the first N
members merged, and the upper bound is countable subadditivity:
``sum_{i<=N} lambda(U_i) + tail(N)``, which is exactly ``a`` for U = paperU(a).
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import FamilyDescriptor
from .errors import ShapeError
from .exact import NEG_INF, POS_INF, ZERO, ExtRational, Interval, ext_min
from .sets import (
    CanonicalIntervalSet,
    Complement,
    Family,
    FiniteUnion,
    Intersection,
    Irrationals,
    Ival,
    Rationals,
    SetExpr,
    canonicalize,
    check_truncation,
    cells,
    clip,
    is_finite_fragment,
    normalize,
)

logger = logging.getLogger(__name__)

WHOLE_LINE = Interval(NEG_INF, POS_INF)


@dataclass(frozen=True)
class MeasureBounds:
    """``lower <= lambda(s) <= upper`` at truncation depth N."""

    lower: ExtRational
    upper: ExtRational
    truncation: int
    window: Interval | None = None
    tail: Fraction = Fraction(0)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def measure_exact(c: CanonicalIntervalSet) -> ExtRational:
    """Total length of the intervals; points are null sets."""
    total = ZERO
    for iv in c.intervals:
        total = total + iv.length
    return total


def _fragment_measure(s: SetExpr) -> ExtRational:
    # Segment lengths may have surd endpoints; their surd parts cancel because
    # an isolated point never changes the status of the segments around it.
    cd = cells(s)
    bps = cd.breakpoints
    rational = Fraction(0)
    surds: dict[int, Fraction] = defaultdict(Fraction)
    for k, inside in enumerate(cd.segment_inside):
        if not inside:
            continue
        if k == 0 or k == len(bps):
            return POS_INF
        lo, hi = bps[k - 1], bps[k]
        rational += hi.p - lo.p
        surds[hi.d] += hi.c
        surds[lo.d] -= lo.c
    leftover = {d: c for d, c in surds.items() if c and d != 1}
    if leftover:
        raise ShapeError(f"irrational measure residue {leftover}")
    return ExtRational(rational)


def _presentation(body: SetExpr) -> tuple[list[Interval], list[FamilyDescriptor]]:
    if isinstance(body, Family):
        return [], [body.family]
    if isinstance(body, FiniteUnion):
        intervals: list[Interval] = []
        families: list[FamilyDescriptor] = []
        for part in body.parts:
            ivs, fams = _presentation(part)
            intervals.extend(ivs)
            families.extend(fams)
        return intervals, families
    if is_finite_fragment(body):
        return list(canonicalize(body).intervals), []
    msg = (
        f"cannot bound the measure of a {type(body).__name__} node; expected an "
        "interval union, a family, or a complement of one inside a window"
    )
    raise ShapeError(msg)


def _inner_bounds(
    body: SetExpr, window: Interval, n: int
) -> tuple[ExtRational, ExtRational, Fraction]:
    width = window.length
    if isinstance(body, (Rationals, Irrationals)):
        if not window.is_bounded:
            name = "QQ" if isinstance(body, Rationals) else "II"
            raise ShapeError(f"the measure of {name} needs a bounded window")
        value = ZERO if isinstance(body, Rationals) else width
        return value, value, Fraction(0)
    finite, families = _presentation(body)
    truncated = list(finite)
    upper = measure_exact(normalize(clip(finite, window)))
    tail = Fraction(0)
    for family in families:
        members = clip(family.prefix(n), window)
        truncated.extend(members)
        for iv in members:
            upper = upper + iv.length
        tail += family.lengths.tail(n)
    upper = ext_min(upper + ExtRational(tail), width)
    lower = measure_exact(normalize(clip(truncated, window)))
    return lower, upper, tail


def measure_bounds(s: SetExpr, truncation: int = 1000) -> MeasureBounds:
    """Certified bounds on the Lebesgue measure of s.

    Accepts finite Boolean combinations of intervals and points (exact), unions
    of intervals and families, and ``complement(P) & window`` forms.
    """
    check_truncation(truncation)
    if is_finite_fragment(s):
        value = _fragment_measure(s)
        return MeasureBounds(value, value, truncation)

    parts = list(s.parts) if isinstance(s, Intersection) else [s]
    windows = [p for p in parts if isinstance(p, Ival)]
    rest = [p for p in parts if not isinstance(p, Ival)]
    if len(rest) != 1:
        msg = "expected a single non-interval operand intersected with windows"
        raise ShapeError(msg)
    window = WHOLE_LINE
    for w in windows:
        window = window.intersect(w.interval)
    body = rest[0]
    negated = isinstance(body, Complement)
    if isinstance(body, Complement):
        body = body.inner
    bounded = window if windows else None
    if window.is_empty:
        return MeasureBounds(ZERO, ZERO, truncation, bounded)

    lower, upper, tail = _inner_bounds(body, window, truncation)
    if negated:
        width = window.length
        if not width.is_finite:
            if not upper.is_finite:
                msg = "complement of a set of unbounded measure needs a bounded window"
                raise ShapeError(msg)
            # lambda(P) < inf, so its complement has infinite measure.
            return MeasureBounds(POS_INF, POS_INF, truncation, bounded, tail)
        lower, upper = width - upper, width - lower
    logger.debug("measure bounds at N=%d: [%s, %s]", truncation, lower, upper)
    return MeasureBounds(lower, upper, truncation, bounded, tail)


def probe_window(upper: ExtRational) -> Interval:
    """A window ``(0, floor(M) + 2)`` strictly wider than a finite measure bound M."""
    return Interval.of(0, math.floor(upper.value) + 2)


def is_measurable_shape(s: SetExpr) -> bool:
    """True when :func:`measure_bounds` accepts s."""
    try:
        measure_bounds(s, 1)
    except ShapeError:
        return False
    return True
