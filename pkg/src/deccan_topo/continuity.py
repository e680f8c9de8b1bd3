"""
Finite step functions into the real line and their continuity certificates.

The codomain always carries the usual topology. Preimages commute with unions
and every usual-open set is a union of rational intervals, so it is enough to
check the preimage of each basis interval. Those preimages depend only on which
function values the interval contains, which leaves finitely many cases.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import Interval, Point, RationalLike
from .sets import (
    EMPTY,
    FULL,
    SetExpr,
    Truth,
    check_truncation,
    complement,
    member,
    union,
)
from .topology import (
    OpennessCertificate,
    TopologySpec,
    Verdict,
    is_open,
    probe_grid,
    replay_openness,
)

logger = logging.getLogger(__name__)

BASIS_NOTE = (
    "checked on codomain basis intervals only: preimages commute with unions"
)


@dataclass(frozen=True)
class StepFunction:
    """``f(x) = value`` of the region containing x, else ``default``.

    Regions are expected to be pairwise disjoint.
    """

    pieces: tuple[tuple[SetExpr, Fraction], ...] = ()
    default: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "pieces", tuple((r, Fraction(v)) for r, v in self.pieces)
        )
        object.__setattr__(self, "default", Fraction(self.default))

    @property
    def values(self) -> tuple[Fraction, ...]:
        """Distinct values in ascending order."""
        return tuple(sorted({self.default, *(v for _, v in self.pieces)}))

    def evaluate(
        self, x: Point | RationalLike, truncation: int = 1000
    ) -> Fraction | None:
        """The value at x, or None when no region is IN and some are undecided."""
        undecided = False
        for region, value in self.pieces:
            truth = member(x, region, truncation)
            if truth is Truth.IN:
                return value
            undecided = undecided or truth is Truth.UNKNOWN
        return None if undecided else self.default


def indicator(region: SetExpr) -> StepFunction:
    """1 on the region, 0 elsewhere."""
    return StepFunction(((region, Fraction(1)),), Fraction(0))


def constant(value: RationalLike) -> StepFunction:
    return StepFunction((), Fraction(value))


def overlap_witness(f: StepFunction, truncation: int = 64) -> Point | None:
    """A probe point that lies in two regions of f, if any."""
    regions = [r for r, _ in f.pieces]
    if len(regions) < 2:
        return None
    for x in probe_grid(*regions):
        hits = sum(member(x, r, truncation) is Truth.IN for r in regions)
        if hits > 1:
            return x
    return None


def preimage(f: StepFunction, v: Interval) -> SetExpr:
    """Exact symbolic preimage ``f^-1(V)`` of an open codomain interval."""
    hits = {val for val in f.values if v.contains(Point.rational(val))}
    if len(hits) == len(f.values):
        return FULL
    if not hits:
        return EMPTY
    if f.default in hits:
        return complement(union(*(r for r, val in f.pieces if val not in hits)))
    return union(*(r for r, val in f.pieces if val in hits))


@dataclass(frozen=True)
class ValueClass:
    """Codomain intervals containing exactly ``values`` of the function."""

    values: tuple[Fraction, ...]
    mask: int
    representative: Interval


def value_classes(f: StepFunction) -> list[ValueClass]:
    """Every class of codomain intervals, ordered by ascending value bitmask.

    An interval is convex, so it contains a contiguous run of the sorted values
    or none of them.
    """
    vals = f.values
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    delta = min(gaps) / 2 if gaps else Fraction(1, 2)
    found = [ValueClass((), 0, Interval.of(vals[-1] + 1, vals[-1] + 2))]
    for i in range(len(vals)):
        for j in range(i, len(vals)):
            mask = sum(1 << k for k in range(i, j + 1))
            rep = Interval.of(vals[i] - delta, vals[j] + delta)
            found.append(ValueClass(vals[i : j + 1], mask, rep))
    return sorted(found, key=lambda c: c.mask)


def class_of(f: StepFunction, v: Interval) -> ValueClass:
    """The value class a codomain interval falls into."""
    mask = sum(
        1 << k for k, val in enumerate(f.values) if v.contains(Point.rational(val))
    )
    return next(c for c in value_classes(f) if c.mask == mask)


class ContinuityVerdict(Enum):
    CONTINUOUS = "continuous"
    DISCONTINUOUS = "discontinuous"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CaseResult:
    value_class: ValueClass
    preimage: SetExpr
    openness: OpennessCertificate


@dataclass(frozen=True)
class ContinuityCertificate:
    function: StepFunction
    domain: TopologySpec
    verdict: ContinuityVerdict
    truncation: int
    cases: tuple[CaseResult, ...]
    witness: CaseResult | None = None
    note: str = BASIS_NOTE


def _verdict(
    cases: tuple[CaseResult, ...],
) -> tuple[ContinuityVerdict, CaseResult | None]:
    for case in cases:
        if case.openness.verdict is Verdict.NOT_OPEN:
            return ContinuityVerdict.DISCONTINUOUS, case
    if all(c.openness.verdict is Verdict.OPEN for c in cases):
        return ContinuityVerdict.CONTINUOUS, None
    return ContinuityVerdict.UNKNOWN, None


def check_continuity(
    f: StepFunction,
    domain: TopologySpec,
    truncation: int = 1000,
    max_workers: int | None = None,
) -> ContinuityCertificate:
    """Certify continuity of f from ``domain`` into the usual real line.

    With ``max_workers`` the case classes are checked on a thread pool; the
    witness is still the first failing class in bitmask order.
    """
    check_truncation(truncation)
    classes = value_classes(f)

    def run(cls: ValueClass) -> CaseResult:
        pre = preimage(f, cls.representative)
        return CaseResult(cls, pre, is_open(pre, domain, truncation))

    if max_workers:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            cases = tuple(pool.map(run, classes))
    else:
        cases = tuple(run(c) for c in classes)
    verdict, witness = _verdict(cases)
    if witness is not None:
        logger.debug(
            "discontinuity witness V=%s in %s",
            witness.value_class.representative,
            domain,
        )
    return ContinuityCertificate(f, domain, verdict, truncation, cases, witness)


def replay_continuity(cert: ContinuityCertificate) -> bool:
    """Re-derive the case split and replay every embedded openness certificate."""
    classes = value_classes(cert.function)
    if [c.value_class for c in cert.cases] != classes:
        return False
    for case in cert.cases:
        expected = preimage(cert.function, case.value_class.representative)
        if case.preimage != expected or case.openness.subject != expected:
            return False
        if case.openness.topology != cert.domain:
            return False
        if not replay_openness(case.openness):
            return False
    return _verdict(cert.cases) == (cert.verdict, cert.witness)
