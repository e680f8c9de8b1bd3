"""
The indicator-of-U counterexample as a single checked report.

U is the countable union of the intervals ``U_i`` of total length a centered on
an enumeration of the rationals. Its indicator is continuous from the Michael
line into the usual reals, but not once the union axiom is weakened to
countable unions: the preimage of ``(-1/2, 1/2)`` is the complement of U, an
uncountable set with no rationals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .continuity import (
    ContinuityCertificate,
    ContinuityVerdict,
    check_continuity,
    indicator,
    replay_continuity,
)
from .enumeration import FamilyDescriptor
from .exact import ZERO, ExtRational, RationalLike
from .measure import MeasureBounds, measure_bounds
from .sets import build_paper_u, check_truncation, complement
from .topology import MICHAEL, MICHAEL_C, R1

logger = logging.getLogger(__name__)

ERRATUM = (
    "it is the measure of R \\ U that is infinite, lambda(R \\ U) = inf; "
    "the set R \\ U is uncountable because it has positive measure"
)


class Outcome(Enum):
    HELD = "held"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Assertion:
    name: str
    outcome: Outcome
    detail: str = ""


@dataclass(frozen=True)
class Theorem1Report:
    a: Fraction
    truncation: int
    family: FamilyDescriptor
    michael: ContinuityCertificate
    michael_c: ContinuityCertificate
    measure: MeasureBounds
    complement_measure: MeasureBounds
    assertions: tuple[Assertion, ...]
    erratum: str = ERRATUM

    @property
    def status(self) -> Outcome:
        outcomes = {a.outcome for a in self.assertions}
        if Outcome.FAILED in outcomes:
            return Outcome.FAILED
        if Outcome.INCONCLUSIVE in outcomes:
            return Outcome.INCONCLUSIVE
        return Outcome.HELD


def _from_verdict(
    verdict: ContinuityVerdict, wanted: ContinuityVerdict
) -> Outcome:
    if verdict is ContinuityVerdict.UNKNOWN:
        return Outcome.INCONCLUSIVE
    return Outcome.HELD if verdict is wanted else Outcome.FAILED


def _check(flag: bool) -> Outcome:
    return Outcome.HELD if flag else Outcome.FAILED


def theorem1(
    a: RationalLike = 1, truncation: int = 1000, max_workers: int | None = None
) -> Theorem1Report:
    """Build U and its indicator, certify both continuity claims and bound λ(U)."""
    check_truncation(truncation)
    u = build_paper_u(a)
    f = indicator(u)

    on_michael = check_continuity(f, MICHAEL, truncation, max_workers)
    on_michael_c = check_continuity(f, MICHAEL_C, truncation, max_workers)
    bounds = measure_bounds(u, truncation)
    outside = measure_bounds(complement(u), truncation)
    scale = ExtRational(Fraction(a))

    assertions = [
        Assertion(
            "michael-continuous",
            _from_verdict(on_michael.verdict, ContinuityVerdict.CONTINUOUS),
            f"verdict {on_michael.verdict.value}",
        ),
        Assertion(
            "michael-four-cases",
            _check(len(on_michael.cases) == 4),
            f"{len(on_michael.cases)} preimage cases",
        ),
    ]

    witness = on_michael_c.witness
    outcome = _from_verdict(on_michael_c.verdict, ContinuityVerdict.DISCONTINUOUS)
    if outcome is Outcome.HELD:
        outcome = _check(
            witness is not None
            and witness.preimage == complement(u)
            and witness.openness.rule == R1
        )
    assertions.append(
        Assertion(
            "michaelC-discontinuous",
            outcome,
            (
                f"witness V={witness.value_class.representative}"
                if witness
                else "no witness"
            ),
        )
    )
    assertions.append(
        Assertion(
            "measure-bounds",
            _check(ZERO < bounds.lower <= bounds.upper <= scale),
            f"{bounds.lower} <= lambda(U) <= {bounds.upper}",
        )
    )
    assertions.append(
        Assertion(
            "complement-measure-infinite",
            _check(not outside.lower.is_finite),
            f"lambda(R \\ U) = {outside.lower}",
        )
    )
    assertions.append(
        Assertion(
            "certificates-replay",
            _check(replay_continuity(on_michael) and replay_continuity(on_michael_c)),
        )
    )

    report = Theorem1Report(
        Fraction(a),
        truncation,
        u.family,
        on_michael,
        on_michael_c,
        bounds,
        outside,
        tuple(assertions),
    )
    logger.debug("theorem1 a=%s N=%d: %s", a, truncation, report.status.value)
    return report
