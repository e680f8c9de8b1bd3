"""
Openness under the usual and Michael bases, with arbitrary or countable unions.

:func:`is_open` is a rule-based certifier over the representable fragment, not a
decision procedure: when no rule fires it answers ``UNKNOWN``. Every
certificate carries enough evidence for :func:`replay_openness` to re-check it.

Rules
-----
trivial
    The empty set and the whole line.
basis-union
    An explicit countable presentation: rational intervals, irrational
    singletons (Michael basis only) and named families.
finite-union
    A finite union of parts each certified open.
finite-intersection
    A finite intersection of parts each certified open.
interior
    A finite Boolean combination of intervals and points whose every point
    sits inside an open cell run (or is an irrational singleton on the Michael
    basis), when its canonical form needs an irrational endpoint.
irrational-singletons
    Michael basis, arbitrary unions: any set of irrationals is the union of its
    singletons.
R0
    A point of the set with no basis element around it inside the set.
R1
    Michael basis, countable unions: a set with no rationals can only use
    singletons, and countably many singletons cannot cover an uncountable set.
R2
    Not open with arbitrary unions implies not open with countable unions.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Hashable

from .enumeration import FamilyDescriptor, RationalEnumeration
from .errors import PreconditionError, ShapeError
from .exact import Interval, Point, simplest_in
from .measure import MeasureBounds, measure_bounds, probe_window
from .sets import (
    CellDecomposition,
    Complement,
    Empty,
    Family,
    FiniteUnion,
    Full,
    Intersection,
    Irrationals,
    Ival,
    Rationals,
    SetExpr,
    Single,
    Truth,
    canonical_from_cells,
    cells,
    check_truncation,
    intersect,
    is_finite_fragment,
    member,
    normalize,
    union,
    walk,
)

logger = logging.getLogger(__name__)


class Basis(Enum):
    USUAL = "usual"
    MICHAEL = "michael"


class UnionMode(Enum):
    ARBITRARY = "arbitrary"
    COUNTABLE = "countable"


@dataclass(frozen=True)
class TopologySpec:
    basis: Basis
    union_mode: UnionMode

    @property
    def name(self) -> str:
        suffix = "C" if self.union_mode is UnionMode.COUNTABLE else ""
        return f"{self.basis.value}{suffix}"

    @property
    def arbitrary(self) -> TopologySpec:
        return TopologySpec(self.basis, UnionMode.ARBITRARY)

    def __str__(self) -> str:
        return self.name


USUAL = TopologySpec(Basis.USUAL, UnionMode.ARBITRARY)
USUAL_C = TopologySpec(Basis.USUAL, UnionMode.COUNTABLE)
MICHAEL = TopologySpec(Basis.MICHAEL, UnionMode.ARBITRARY)
MICHAEL_C = TopologySpec(Basis.MICHAEL, UnionMode.COUNTABLE)
TOPOLOGIES = {t.name: t for t in (USUAL, USUAL_C, MICHAEL, MICHAEL_C)}


class Verdict(Enum):
    OPEN = "open"
    NOT_OPEN = "not-open"
    UNKNOWN = "unknown"


class Cardinality(Enum):
    FINITE = "finite"
    COUNTABLY_INFINITE = "countably-infinite"
    UNCOUNTABLE = "uncountable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CardinalityClass:
    kind: Cardinality
    count: int | None = None
    reason: str = ""
    measure: MeasureBounds | None = None

    @property
    def nonempty(self) -> bool:
        if self.kind is Cardinality.FINITE:
            return bool(self.count)
        return self.kind in (Cardinality.COUNTABLY_INFINITE, Cardinality.UNCOUNTABLE)

    def __str__(self) -> str:
        if self.kind is Cardinality.FINITE:
            return f"Finite({self.count})"
        return {
            Cardinality.COUNTABLY_INFINITE: "CountablyInfinite",
            Cardinality.UNCOUNTABLE: "Uncountable",
            Cardinality.UNKNOWN: "Unknown",
        }[self.kind]


TRIVIAL = "trivial"
BASIS_UNION = "basis-union"
FINITE_UNION = "finite-union"
FINITE_INTERSECTION = "finite-intersection"
INTERIOR = "interior"
SINGLETONS = "irrational-singletons"
R0 = "R0"
R1 = "R1"
R2 = "R2"
NO_RULE = "none"

BOUNDARY = "boundary"
NO_IRRATIONALS = "no-irrationals"
NO_RATIONALS = "no-rationals"


@dataclass(frozen=True)
class OpennessEvidence:
    intervals: tuple[Interval, ...] = ()
    points: tuple[Point, ...] = ()
    families: tuple[FamilyDescriptor, ...] = ()
    schema: tuple[SetExpr, ...] = ()
    witness_point: Point | None = None
    cardinality: CardinalityClass | None = None
    measure: MeasureBounds | None = None
    premise: OpennessCertificate | None = None
    parts: tuple[OpennessCertificate, ...] = ()
    facts: tuple[str, ...] = ()

    def presentation(self) -> SetExpr:
        """The union of every basis piece and schema set named as witness."""
        return union(
            *(Ival(iv) for iv in self.intervals),
            *(Single(p) for p in self.points),
            *(Family(f) for f in self.families),
            *self.schema,
        )


@dataclass(frozen=True)
class OpennessCertificate:
    subject: SetExpr
    topology: TopologySpec
    verdict: Verdict
    rule: str
    truncation: int
    evidence: OpennessEvidence = field(default_factory=OpennessEvidence)


# -- structural facts ---------------------------------------------------------


def _is_empty_node(s: SetExpr) -> bool:
    return isinstance(s, Empty) or (isinstance(s, Ival) and s.interval.is_empty)


def avoids_rationals(s: SetExpr) -> bool:
    """Sound check that s contains no rational number."""
    if _is_empty_node(s) or isinstance(s, Irrationals):
        return True
    if isinstance(s, Single):
        return not s.point.is_rational
    if isinstance(s, FiniteUnion):
        return all(avoids_rationals(p) for p in s.parts)
    if isinstance(s, Intersection):
        return any(avoids_rationals(p) for p in s.parts)
    if isinstance(s, Complement):
        return covers_rationals(s.inner)
    return False


def covers_rationals(s: SetExpr) -> bool:
    """Sound check that every rational lies in s."""
    # A family's enumeration is onto the rationals and each U_i contains q_i.
    if isinstance(s, (Full, Rationals, Family)):
        return True
    if isinstance(s, FiniteUnion):
        return any(covers_rationals(p) for p in s.parts)
    if isinstance(s, Intersection):
        return all(covers_rationals(p) for p in s.parts)
    if isinstance(s, Complement):
        return avoids_rationals(s.inner)
    return False


def within_rationals(s: SetExpr) -> bool:
    """Sound check that s contains only rational numbers."""
    if _is_empty_node(s) or isinstance(s, Rationals):
        return True
    if isinstance(s, Single):
        return s.point.is_rational
    if isinstance(s, FiniteUnion):
        return all(within_rationals(p) for p in s.parts)
    if isinstance(s, Intersection):
        return any(within_rationals(p) for p in s.parts)
    if isinstance(s, Complement):
        return covers_irrationals(s.inner)
    return False


def covers_irrationals(s: SetExpr) -> bool:
    """Sound check that every irrational number lies in s."""
    if isinstance(s, (Full, Irrationals)):
        return True
    if isinstance(s, FiniteUnion):
        return any(covers_irrationals(p) for p in s.parts)
    if isinstance(s, Intersection):
        return all(covers_irrationals(p) for p in s.parts)
    if isinstance(s, Complement):
        return within_rationals(s.inner)
    return False


def explicit_points(s: SetExpr, truncation: int = 1000) -> tuple[Point, ...] | None:
    """The points of s when s is visibly a finite point set, else None."""
    if _is_empty_node(s):
        return ()
    if isinstance(s, Single):
        return (s.point,)
    if isinstance(s, FiniteUnion):
        found: set[Point] = set()
        for part in s.parts:
            pts = explicit_points(part, truncation)
            if pts is None:
                return None
            found.update(pts)
        return tuple(sorted(found))
    if isinstance(s, Intersection):
        for k, part in enumerate(s.parts):
            pts = explicit_points(part, truncation)
            if pts is None:
                continue
            others = intersect(*(s.parts[:k] + s.parts[k + 1 :]))
            kept = []
            for p in pts:
                truth = member(p, others, truncation)
                if truth is Truth.UNKNOWN:
                    return None
                if truth is Truth.IN:
                    kept.append(p)
            return tuple(kept)
    return None


# -- cardinality --------------------------------------------------------------


def _positive_lower_bound(s: SetExpr, n: int) -> MeasureBounds | None:
    candidates: list[SetExpr] = []
    if isinstance(s, Complement):
        try:
            inner = measure_bounds(s.inner, n)
        except ShapeError:
            inner = None
        if inner is not None and inner.upper.is_finite:
            candidates.append(intersect(s, Ival(probe_window(inner.upper))))
    if isinstance(s, Intersection) and any(
        isinstance(p, Irrationals) for p in s.parts
    ):
        # The irrationals are co-null: dropping them keeps the measure.
        rest = intersect(*(p for p in s.parts if not isinstance(p, Irrationals)))
        found = _positive_lower_bound(rest, n)
        if found is not None:
            return found
    candidates.append(s)
    for candidate in candidates:
        try:
            bounds = measure_bounds(candidate, n)
        except ShapeError:
            continue
        if bounds.lower.value > 0 or bounds.lower.infinity > 0:
            return bounds
    return None


def cardinality(s: SetExpr, truncation: int = 1000) -> CardinalityClass:
    """Sound cardinality classification of s."""
    check_truncation(truncation)
    return _cardinality(s, truncation)


def _cardinality(s: SetExpr, n: int) -> CardinalityClass:
    pts = explicit_points(s, n)
    if pts is not None:
        return CardinalityClass(Cardinality.FINITE, len(pts), "explicit point set")
    if isinstance(s, Rationals):
        return CardinalityClass(Cardinality.COUNTABLY_INFINITE, reason="the rationals")
    if isinstance(s, FiniteUnion):
        classes = [_cardinality(p, n) for p in s.parts]
        for cls in classes:
            if cls.kind is Cardinality.UNCOUNTABLE:
                return CardinalityClass(
                    Cardinality.UNCOUNTABLE,
                    reason="has an uncountable part",
                    measure=cls.measure,
                )
        countable = (Cardinality.FINITE, Cardinality.COUNTABLY_INFINITE)
        if all(cls.kind in countable for cls in classes):
            return CardinalityClass(
                Cardinality.COUNTABLY_INFINITE, reason="finite union of countable sets"
            )
    if covers_irrationals(s):
        return CardinalityClass(
            Cardinality.UNCOUNTABLE, reason="contains every irrational"
        )
    bounds = _positive_lower_bound(s, n)
    if bounds is not None:
        return CardinalityClass(
            Cardinality.UNCOUNTABLE, reason="positive Lebesgue measure", measure=bounds
        )
    return CardinalityClass(Cardinality.UNKNOWN, reason="no rule applies")


# -- openness -----------------------------------------------------------------


def find_rational_member(s: SetExpr, truncation: int = 1000) -> Point | None:
    """A rational point certified to lie in s, if a simple candidate works."""
    candidates: list[Fraction] = []
    for node in walk(s):
        if isinstance(node, Single) and node.point.is_rational:
            candidates.append(node.point.p)
        elif isinstance(node, Ival) and not node.interval.is_empty:
            candidates.append(simplest_in(node.interval))
    enumeration = RationalEnumeration()
    candidates.extend(enumeration.enumerate(i) for i in range(1, 33))
    for q in candidates:
        if member(q, s, truncation) is Truth.IN:
            return Point.rational(q)
    return None


def is_open(
    s: SetExpr, topology: TopologySpec, truncation: int = 1000
) -> OpennessCertificate:
    """Certify whether s is open in the given topology."""
    check_truncation(truncation)
    cert = _decide(s, topology, truncation)
    logger.debug(
        "is_open in %s at N=%d: %s by %s",
        topology,
        truncation,
        cert.verdict.value,
        cert.rule,
    )
    return cert


def _decide(s: SetExpr, t: TopologySpec, n: int) -> OpennessCertificate:
    def cert(verdict: Verdict, rule: str, **evidence: object) -> OpennessCertificate:
        ev = OpennessEvidence(**evidence)  # type: ignore[arg-type]
        return OpennessCertificate(s, t, verdict, rule, n, ev)

    if isinstance(s, Full) or _is_empty_node(s):
        return cert(Verdict.OPEN, TRIVIAL)
    if is_finite_fragment(s):
        return _decide_finite(s, t, n)
    if isinstance(s, Family):
        return cert(
            Verdict.OPEN,
            BASIS_UNION,
            families=(s.family,),
            facts=("countable union of rational-endpoint intervals",),
        )
    if isinstance(s, FiniteUnion):
        subs = [_decide(p, t, n) for p in s.parts]
        if all(c.verdict is Verdict.OPEN for c in subs):
            return _merge(s, t, n, subs)
    if isinstance(s, Intersection):
        subs = [_decide(p, t, n) for p in s.parts]
        if all(c.verdict is Verdict.OPEN for c in subs):
            return cert(
                Verdict.OPEN,
                FINITE_INTERSECTION,
                parts=tuple(subs),
                facts=(f"finite intersection of {len(subs)} open parts",),
            )

    if t.union_mode is UnionMode.COUNTABLE:
        premise = _decide(s, t.arbitrary, n)
        if premise.verdict is Verdict.NOT_OPEN:
            return cert(
                Verdict.NOT_OPEN,
                R2,
                premise=premise,
                facts=(f"not open in {t.arbitrary}, and {t} is coarser",),
            )

    if within_rationals(s):
        p = find_rational_member(s, n)
        if p is not None:
            return cert(
                Verdict.NOT_OPEN,
                R0,
                witness_point=p,
                facts=(
                    NO_IRRATIONALS,
                    f"{p} is in the set, every interval around it meets an "
                    "irrational outside the set, and rational points have no "
                    "singleton basis element",
                ),
            )

    if avoids_rationals(s):
        card = _cardinality(s, n)
        if card.kind is Cardinality.FINITE and card.count == 0:
            return cert(Verdict.OPEN, TRIVIAL, cardinality=card)
        if t.basis is Basis.USUAL:
            if card.nonempty:
                return cert(
                    Verdict.NOT_OPEN,
                    R0,
                    cardinality=card,
                    measure=card.measure,
                    facts=(
                        NO_RATIONALS,
                        "the set is nonempty and contains no rational, so no "
                        "rational interval fits inside it",
                    ),
                )
        elif t.union_mode is UnionMode.ARBITRARY:
            return cert(
                Verdict.OPEN,
                SINGLETONS,
                schema=(s,),
                facts=("union of the irrational singletons it contains",),
            )
        elif card.kind is Cardinality.UNCOUNTABLE:
            return cert(
                Verdict.NOT_OPEN,
                R1,
                cardinality=card,
                measure=card.measure,
                facts=(
                    "the set contains no rational, so a countable presentation "
                    "may use no interval",
                    "countably many irrational singletons cannot cover an "
                    "uncountable set",
                ),
            )
        elif card.kind is Cardinality.FINITE:
            return cert(
                Verdict.OPEN,
                BASIS_UNION,
                points=explicit_points(s, n) or (),
                cardinality=card,
                facts=("finitely many irrational singletons",),
            )
    return cert(Verdict.UNKNOWN, NO_RULE, facts=(f"no rule settles the set at N={n}",))


def _boundary_point(cd: CellDecomposition, michael: bool) -> tuple[Point, str] | None:
    """A breakpoint in the set with an outside cell next to it, and that side."""
    for k, bp in enumerate(cd.breakpoints):
        if not cd.point_inside[k]:
            continue
        if cd.segment_inside[k] and cd.segment_inside[k + 1]:
            continue
        if michael and not bp.is_rational:
            continue
        return bp, "left" if not cd.segment_inside[k] else "right"
    return None


def _decide_finite(s: SetExpr, t: TopologySpec, n: int) -> OpennessCertificate:
    cd = cells(s)
    found = _boundary_point(cd, t.basis is Basis.MICHAEL)
    if found is not None:
        bp, side = found
        return OpennessCertificate(
            s,
            t,
            Verdict.NOT_OPEN,
            R0,
            n,
            OpennessEvidence(
                witness_point=bp,
                facts=(BOUNDARY, f"points just to the {side} of {bp} lie outside"),
            ),
        )
    try:
        canonical = canonical_from_cells(cd)
    except ShapeError as exc:
        return OpennessCertificate(
            s,
            t,
            Verdict.OPEN,
            INTERIOR,
            n,
            OpennessEvidence(
                facts=(
                    "every point of the set lies in an open run of cells or is "
                    "an irrational singleton of the basis",
                    str(exc),
                ),
            ),
        )
    return OpennessCertificate(
        s,
        t,
        Verdict.OPEN,
        BASIS_UNION,
        n,
        OpennessEvidence(
            intervals=canonical.intervals,
            points=canonical.points,
            facts=("finite presentation",),
        ),
    )


def _merge(
    s: SetExpr, t: TopologySpec, n: int, subs: Sequence[OpennessCertificate]
) -> OpennessCertificate:
    if not all(_is_flat(sub) for sub in subs):
        return OpennessCertificate(
            s,
            t,
            Verdict.OPEN,
            FINITE_UNION,
            n,
            OpennessEvidence(
                parts=tuple(subs),
                facts=(f"finite union of {len(subs)} open parts",),
            ),
        )
    intervals: list[Interval] = []
    points: set[Point] = set()
    families: list[FamilyDescriptor] = []
    schema: list[SetExpr] = []
    for sub in subs:
        ev = sub.evidence
        intervals.extend(ev.intervals)
        points.update(ev.points)
        families.extend(f for f in ev.families if f not in families)
        schema.extend(x for x in ev.schema if x not in schema)
    canonical = normalize(intervals)
    loose = sorted(p for p in points if not canonical.contains(p))
    return OpennessCertificate(
        s,
        t,
        Verdict.OPEN,
        FINITE_UNION,
        n,
        OpennessEvidence(
            intervals=canonical.intervals,
            points=tuple(loose),
            families=tuple(families),
            schema=tuple(schema),
            facts=(f"finite union of {len(subs)} open parts",),
        ),
    )


def _is_flat(cert: OpennessCertificate) -> bool:
    """Evidence that is a direct presentation rather than a list of parts."""
    return cert.rule not in (FINITE_INTERSECTION, INTERIOR) and not cert.evidence.parts


# -- replay -------------------------------------------------------------------


def probe_grid(*exprs: SetExpr, max_points: int = 4096) -> list[Point]:
    """Rational test points with denominator 64 over a window covering every
    endpoint of the expressions, plus the expressions' own points."""
    numbers: list[Fraction] = []
    extra: list[Point] = []
    for expr in exprs:
        for node in walk(expr):
            if isinstance(node, Ival):
                for end in (node.interval.lo, node.interval.hi):
                    if end.is_finite:
                        numbers.append(end.value)
            elif isinstance(node, Single):
                extra.append(node.point)
                numbers.extend(node.point.bracket(4))
            elif isinstance(node, Family):
                for iv in node.family.prefix(8):
                    numbers.extend((iv.lo.value, iv.hi.value))
    lo = math.floor(min(numbers, default=Fraction(-1))) - 1
    hi = math.ceil(max(numbers, default=Fraction(1))) + 1
    step = Fraction(1, 64)
    if (hi - lo) * 64 > max_points:
        step = Fraction(math.ceil(Fraction(hi - lo, max_points) * 64), 64)
    grid = []
    x = Fraction(lo)
    while x <= hi:
        grid.append(Point.rational(x))
        x += step
    return grid + extra


def pointwise_agree(a: SetExpr, b: SetExpr, truncation: int = 1000) -> bool:
    """No probe point is decided IN for one set and OUT for the other."""
    for x in probe_grid(a, b):
        left, right = member(x, a, truncation), member(x, b, truncation)
        if Truth.UNKNOWN not in (left, right) and left is not right:
            return False
    return True


def replay_openness(cert: OpennessCertificate) -> bool:
    """Independently re-check a certificate's evidence."""
    s, t, n, ev = cert.subject, cert.topology, cert.truncation, cert.evidence
    if cert.verdict is Verdict.UNKNOWN:
        return True
    if cert.rule == TRIVIAL:
        if isinstance(s, Full) or _is_empty_node(s):
            return True
        card = _cardinality(s, n)
        return card.kind is Cardinality.FINITE and card.count == 0
    if cert.verdict is Verdict.OPEN and (ev.parts or cert.rule == FINITE_INTERSECTION):
        return _replay_parts(cert)
    if cert.rule == INTERIOR:
        return (
            cert.verdict is Verdict.OPEN
            and is_finite_fragment(s)
            and _boundary_point(cells(s), t.basis is Basis.MICHAEL) is None
        )
    if cert.verdict is Verdict.OPEN:
        if t.basis is Basis.USUAL and (ev.points or ev.schema):
            return False
        if any(p.is_rational for p in ev.points):
            return False
        if ev.schema and t.union_mode is UnionMode.COUNTABLE:
            return False
        if not all(avoids_rationals(x) for x in ev.schema):
            return False
        return pointwise_agree(s, ev.presentation(), n)
    if cert.rule == R0:
        return _replay_r0(s, t, n, ev)
    if cert.rule == R1:
        if t != MICHAEL_C or not avoids_rationals(s):
            return False
        card = _cardinality(s, n)
        if card.kind is not Cardinality.UNCOUNTABLE:
            return False
        return ev.measure is None or card.measure == ev.measure
    if cert.rule == R2:
        premise = ev.premise
        return (
            premise is not None
            and t.union_mode is UnionMode.COUNTABLE
            and premise.subject == s
            and premise.topology == t.arbitrary
            and premise.verdict is Verdict.NOT_OPEN
            and replay_openness(premise)
        )
    return False


def _replay_parts(cert: OpennessCertificate) -> bool:
    s, parts = cert.subject, cert.evidence.parts
    nodes = {FINITE_UNION: FiniteUnion, FINITE_INTERSECTION: Intersection}
    node = nodes.get(cert.rule)
    if node is None or not isinstance(s, node) or len(s.parts) != len(parts):
        return False
    return all(
        sub.subject == part
        and sub.topology == cert.topology
        and sub.verdict is Verdict.OPEN
        and replay_openness(sub)
        for part, sub in zip(s.parts, parts)
    )


def _replay_r0(s: SetExpr, t: TopologySpec, n: int, ev: OpennessEvidence) -> bool:
    p = ev.witness_point
    if BOUNDARY in ev.facts and p is not None:
        if t.basis is Basis.MICHAEL and not p.is_rational:
            return False
        cd = cells(s)
        if p not in cd.breakpoints:
            return False
        k = cd.breakpoints.index(p)
        return cd.point_inside[k] and not (
            cd.segment_inside[k] and cd.segment_inside[k + 1]
        )
    if NO_IRRATIONALS in ev.facts and p is not None:
        return (
            p.is_rational and within_rationals(s) and member(p, s, n) is Truth.IN
        )
    if NO_RATIONALS in ev.facts:
        return (
            t.basis is Basis.USUAL
            and avoids_rationals(s)
            and _cardinality(s, n).nonempty
        )
    return False


# -- finite axiom verification ------------------------------------------------


@dataclass(frozen=True)
class AxiomViolation:
    axiom: int
    witness: tuple[frozenset, ...]
    result: frozenset | None = None

    def __str__(self) -> str:
        shown = ", ".join(_fmt_finite(w) for w in self.witness)
        if self.axiom == 1:
            return f"axiom 1: missing {shown}"
        op = "union" if self.axiom == 2 else "intersection"
        result = _fmt_finite(self.result or frozenset())
        return f"axiom {self.axiom}: {op} of {shown} is {result}, not in the collection"


@dataclass(frozen=True)
class AxiomReport:
    universe: frozenset
    collection: tuple[frozenset, ...]
    mode: UnionMode
    violations: tuple[AxiomViolation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def _fmt_finite(s: frozenset | None) -> str:
    if s is None:
        return "?"
    return "{" + ", ".join(str(x) for x in sorted(s, key=repr)) + "}"


def _first_violation(
    sets: Sequence[frozenset], members: set[frozenset], op: str
) -> tuple[tuple[frozenset, ...], frozenset] | None:
    # Closure under pairs gives closure under every finite subfamily.
    for pair in combinations(sets, 2):
        result = getattr(frozenset, op)(*pair)
        if result not in members:
            return pair, result
    return None


MAX_UNIVERSE = 20


def verify_axioms(
    universe: Iterable[Hashable],
    collection: Iterable[Iterable[Hashable]],
    mode: UnionMode = UnionMode.ARBITRARY,
) -> AxiomReport:
    """Brute-force check of the three axioms on a finite universe.

    Every subfamily of a finite collection is finite, hence countable, so both
    union modes run the same enumeration and must agree.
    """
    whole = frozenset(universe)
    if len(whole) > MAX_UNIVERSE:
        msg = f"universe has {len(whole)} points; at most {MAX_UNIVERSE} supported"
        raise PreconditionError(msg)
    sets: list[frozenset] = []
    for raw in collection:
        subset = frozenset(raw)
        if not subset <= whole:
            extra = _fmt_finite(subset - whole)
            shown = _fmt_finite(subset)
            msg = f"subset {shown} has points {extra} outside the universe"
            raise PreconditionError(msg)
        if subset not in sets:
            sets.append(subset)
    members = set(sets)

    violations = []
    missing = tuple(x for x in (frozenset(), whole) if x not in members)
    if missing:
        violations.append(AxiomViolation(1, missing))
    for axiom, op in ((2, "union"), (3, "intersection")):
        found = _first_violation(sets, members, op)
        if found is not None:
            violations.append(AxiomViolation(axiom, found[0], found[1]))
    logger.debug("verify_axioms (%s): %d violations", mode.value, len(violations))
    return AxiomReport(whole, tuple(sets), mode, tuple(violations))
