"""Executes parsed statements and collects their results in statement order."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Union

from .config import Settings
from .continuity import ContinuityCertificate, ContinuityVerdict, check_continuity
from .errors import TopoError
from .exact import Point
from .measure import MeasureBounds, measure_bounds
from .parser import Let, Script, Statement
from .sets import Decomposition, SetExpr, Truth, decompose_open, member
from .theorem import Outcome, Theorem1Report, theorem1
from .topology import (
    AxiomReport,
    OpennessCertificate,
    Verdict,
    is_open,
    verify_axioms,
)

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    FAILED = 1
    INCONCLUSIVE = 2
    USAGE = 3


_SEVERITY = (ExitCode.OK, ExitCode.INCONCLUSIVE, ExitCode.FAILED, ExitCode.USAGE)


def worst(codes: list[ExitCode]) -> ExitCode:
    return max(codes, key=_SEVERITY.index, default=ExitCode.OK)


def outcome_code(outcome: Outcome) -> ExitCode:
    return {
        Outcome.HELD: ExitCode.OK,
        Outcome.FAILED: ExitCode.FAILED,
        Outcome.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
    }[outcome]


@dataclass(frozen=True)
class MembershipResult:
    point: Point
    subject: SetExpr
    truth: Truth
    truncation: int


@dataclass(frozen=True)
class ErrorResult:
    message: str


Result = Union[
    OpennessCertificate,
    MeasureBounds,
    MembershipResult,
    Decomposition,
    ContinuityCertificate,
    AxiomReport,
    Theorem1Report,
    ErrorResult,
]


@dataclass(frozen=True)
class Executed:
    statement: Statement
    result: Result | None


def execute(
    stmt: Statement, settings: Settings, max_workers: int | None = None
) -> Result | None:
    """Run one statement; ``let`` has no result."""
    if isinstance(stmt, Let):
        return None
    n = stmt.terms or settings.default_terms
    args = stmt.args
    try:
        if stmt.kind == "isOpen":
            return is_open(args[0], args[1], n)
        if stmt.kind == "measure":
            return measure_bounds(args[0], n)
        if stmt.kind == "member":
            return MembershipResult(args[0], args[1], member(args[0], args[1], n), n)
        if stmt.kind == "decompose":
            return decompose_open(args[0], n)
        if stmt.kind == "continuous":
            return check_continuity(args[0], args[1], n, max_workers)
        if stmt.kind == "axioms":
            return verify_axioms(*args)
        if stmt.kind == "theorem1":
            return theorem1(args[0], n, max_workers)
    except TopoError as exc:
        logger.debug("%s failed: %s", stmt.kind, exc)
        return ErrorResult(str(exc))
    return ErrorResult(f"unknown query kind {stmt.kind!r}")


def run_script(
    script: Script, settings: Settings | None = None, max_workers: int | None = None
) -> list[Executed]:
    settings = settings or Settings()
    return [Executed(s, execute(s, settings, max_workers)) for s in script.statements]


def exit_code(executed: list[Executed]) -> ExitCode:
    """Worst status over the run.

    Errors rank first, then failed theorem1 reports. Inconclusive theorem1
    reports and unknown openness or continuity verdicts exit 2.
    """
    codes = []
    for item in executed:
        result = item.result
        if isinstance(result, ErrorResult):
            codes.append(ExitCode.USAGE)
        elif isinstance(result, Theorem1Report):
            codes.append(outcome_code(result.status))
        elif isinstance(result, (OpennessCertificate, ContinuityCertificate)):
            if result.verdict in (Verdict.UNKNOWN, ContinuityVerdict.UNKNOWN):
                codes.append(ExitCode.INCONCLUSIVE)
    return worst(codes)
