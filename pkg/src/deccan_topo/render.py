"""
Text and JSON renderings of certificates and reports.

Both renderings are deterministic. In JSON every rational is an object of
decimal strings ``{"num": "1", "den": "2"}`` so no precision is lost; the
infinities are the strings ``"inf"`` and ``"-inf"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import singledispatch
from typing import Any

from .continuity import CaseResult, ContinuityCertificate, ValueClass
from .exact import ExtRational, Interval, Point
from .measure import MeasureBounds
from .printer import format_function, format_set, format_statement
from .runner import ErrorResult, Executed, MembershipResult
from .sets import Decomposition
from .theorem import Theorem1Report
from .topology import AxiomReport, CardinalityClass, OpennessCertificate

TEXT = "text"
JSON = "json"


def _rational(q: Fraction) -> dict[str, str]:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _ext(e: ExtRational) -> Any:
    return str(e) if not e.is_finite else _rational(e.value)


def _point(p: Point) -> Any:
    if p.is_rational:
        return _rational(p.p)
    return {"p": _rational(p.p), "c": _rational(p.c), "d": str(p.d)}


def _interval(iv: Interval) -> dict[str, Any]:
    return {"lo": _ext(iv.lo), "hi": _ext(iv.hi)}


def _intervals_text(ivs: tuple[Interval, ...]) -> str:
    return ", ".join(str(iv) for iv in ivs) or "none"


# -- JSON -----------------------------------------------------------------------


@singledispatch
def to_json(obj: Any) -> Any:
    raise TypeError(f"cannot render {type(obj).__name__}")


@to_json.register
def _(m: MeasureBounds) -> Any:
    return {
        "lower": _ext(m.lower),
        "upper": _ext(m.upper),
        "exact": m.exact,
        "truncation": m.truncation,
        "tail": _rational(m.tail),
        "window": _interval(m.window) if m.window is not None else None,
    }


@to_json.register
def _(c: CardinalityClass) -> Any:
    return {"class": str(c), "reason": c.reason}


@to_json.register
def _(cert: OpennessCertificate) -> Any:
    ev = cert.evidence
    return {
        "verdict": cert.verdict.value,
        "rule": cert.rule,
        "basis": cert.topology.basis.value,
        "unionMode": cert.topology.union_mode.value,
        "truncation": cert.truncation,
        "subject": format_set(cert.subject),
        "evidence": {
            "intervals": [_interval(iv) for iv in ev.intervals],
            "points": [_point(p) for p in ev.points],
            "familyId": [f.family_id for f in ev.families],
            "schema": [format_set(s) for s in ev.schema],
            "measureBounds": to_json(ev.measure) if ev.measure else None,
            "cardinality": to_json(ev.cardinality) if ev.cardinality else None,
            "witnessPoint": _point(ev.witness_point) if ev.witness_point else None,
            "facts": list(ev.facts),
            "premise": to_json(ev.premise) if ev.premise else None,
            "parts": [to_json(part) for part in ev.parts],
        },
    }


def _value_class(vc: ValueClass) -> Any:
    return {
        "values": [_rational(v) for v in vc.values],
        "representative": _interval(vc.representative),
    }


def _case(case: CaseResult) -> Any:
    return {
        "valueClass": _value_class(case.value_class),
        "preimage": format_set(case.preimage),
        "openness": to_json(case.openness),
    }


@to_json.register
def _(cert: ContinuityCertificate) -> Any:
    out = {
        "verdict": cert.verdict.value,
        "domain": cert.domain.name,
        "function": format_function(cert.function),
        "truncation": cert.truncation,
        "note": cert.note,
        "cases": [_case(c) for c in cert.cases],
    }
    if cert.witness is not None:
        out["witness"] = {
            "V": _interval(cert.witness.value_class.representative),
            "preimage": format_set(cert.witness.preimage),
            "rule": cert.witness.openness.rule,
        }
    return out


@to_json.register
def _(res: MembershipResult) -> Any:
    return {
        "point": _point(res.point),
        "subject": format_set(res.subject),
        "truth": res.truth.value,
        "truncation": res.truncation,
    }


@to_json.register
def _(d: Decomposition) -> Any:
    return {
        "intervals": [_interval(iv) for iv in d.canonical.intervals],
        "witnesses": [_rational(q) for q in d.witnesses],
        "exact": d.exact,
        "truncation": d.truncation,
    }


def _elements(items: frozenset) -> list[str]:
    return sorted((str(x) for x in items), key=lambda e: (len(e), e))


@to_json.register
def _(report: AxiomReport) -> Any:
    return {
        "valid": report.valid,
        "mode": report.mode.value,
        "universe": _elements(report.universe),
        "violations": [
            {
                "axiom": v.axiom,
                "witness": [_elements(w) for w in v.witness],
                "result": _elements(v.result) if v.result is not None else None,
            }
            for v in report.violations
        ],
    }


@to_json.register
def _(report: Theorem1Report) -> Any:
    return {
        "parameters": {
            "a": _rational(report.a),
            "terms": report.truncation,
            "enumeration": report.family.enumeration.scheme,
            "lengths": report.family.lengths.rule_id,
            "familyId": report.family.family_id,
        },
        "michael": to_json(report.michael),
        "michaelC": to_json(report.michael_c),
        "measure": to_json(report.measure),
        "complementMeasure": to_json(report.complement_measure),
        "erratum": report.erratum,
        "assertions": [
            {"name": a.name, "outcome": a.outcome.value, "detail": a.detail}
            for a in report.assertions
        ],
        "status": report.status.value,
    }


@to_json.register
def _(err: ErrorResult) -> Any:
    return {"error": err.message}


# -- text -----------------------------------------------------------------------


@singledispatch
def to_text(obj: Any) -> list[str]:
    raise TypeError(f"cannot render {type(obj).__name__}")


@to_text.register
def _(m: MeasureBounds) -> list[str]:
    head = f"{m.lower} <= measure <= {m.upper}"
    if m.exact:
        head = f"measure = {m.lower}"
    lines = [f"{head} (N={m.truncation})"]
    if m.window is not None:
        lines.append(f"  window: {m.window}")
    if m.tail:
        lines.append(f"  tail: {m.tail}")
    return lines


@to_text.register
def _(cert: OpennessCertificate) -> list[str]:
    ev = cert.evidence
    lines = [
        f"{cert.verdict.value} in {cert.topology} by {cert.rule} (N={cert.truncation})",
        f"  subject: {format_set(cert.subject)}",
    ]
    if ev.intervals:
        lines.append(f"  intervals: {_intervals_text(ev.intervals)}")
    if ev.points:
        lines.append("  points: " + ", ".join(str(p) for p in ev.points))
    for family in ev.families:
        lines.append(f"  family: {family.family_id}")
    for s in ev.schema:
        lines.append(f"  singletons of: {format_set(s)}")
    if ev.witness_point is not None:
        lines.append(f"  witness point: {ev.witness_point}")
    if ev.cardinality is not None:
        lines.append(f"  cardinality: {ev.cardinality} ({ev.cardinality.reason})")
    if ev.measure is not None:
        lines.append(f"  measure: [{ev.measure.lower}, {ev.measure.upper}]")
    lines.extend(f"  - {fact}" for fact in ev.facts)
    if ev.premise is not None:
        lines.append("  premise:")
        lines.extend("    " + line for line in to_text(ev.premise))
    for part in ev.parts:
        lines.append("  part:")
        lines.extend("    " + line for line in to_text(part))
    return lines


@to_text.register
def _(cert: ContinuityCertificate) -> list[str]:
    lines = [
        f"{cert.verdict.value}: {format_function(cert.function)} from "
        f"{cert.domain} (N={cert.truncation})"
    ]
    for case in cert.cases:
        values = ", ".join(str(v) for v in case.value_class.values)
        lines.append(
            f"  V={case.value_class.representative} values {{{values}}}: "
            f"preimage {format_set(case.preimage)} is "
            f"{case.openness.verdict.value} by {case.openness.rule}"
        )
    if cert.witness is not None:
        lines.append(
            f"  witness: V={cert.witness.value_class.representative}, "
            f"preimage {format_set(cert.witness.preimage)}"
        )
        lines.extend("    " + line for line in to_text(cert.witness.openness))
    lines.append(f"  note: {cert.note}")
    return lines


@to_text.register
def _(res: MembershipResult) -> list[str]:
    subject = format_set(res.subject)
    return [f"{res.point} {res.truth.value} {subject} (N={res.truncation})"]


@to_text.register
def _(d: Decomposition) -> list[str]:
    lines = [f"{len(d.canonical.intervals)} maximal intervals (exact: {d.exact})"]
    for iv, q in zip(d.canonical.intervals, d.witnesses):
        lines.append(f"  {iv} witness {q}")
    return lines


@to_text.register
def _(report: AxiomReport) -> list[str]:
    state = "topology" if report.valid else "not a topology"
    lines = [f"{state} ({report.mode.value} unions)"]
    lines.extend(f"  {v}" for v in report.violations)
    return lines


@to_text.register
def _(report: Theorem1Report) -> list[str]:
    lines = [
        f"theorem1 a={report.a} N={report.truncation}: {report.status.value}",
        f"  family: {report.family.family_id}",
    ]
    for a in report.assertions:
        detail = f" ({a.detail})" if a.detail else ""
        lines.append(f"  [{a.outcome.value}] {a.name}{detail}")
    lines.append("  michael:")
    lines.extend("    " + line for line in to_text(report.michael))
    lines.append("  michaelC:")
    lines.extend("    " + line for line in to_text(report.michael_c))
    lines.append("  measure of U:")
    lines.extend("    " + line for line in to_text(report.measure))
    lines.append(f"  erratum: {report.erratum}")
    return lines


@to_text.register
def _(err: ErrorResult) -> list[str]:
    return [f"error: {err.message}"]


def render(obj: Any, fmt: str = TEXT) -> str:
    """Render one certificate, report or result."""
    if fmt == JSON:
        return json.dumps(to_json(obj), indent=2) + "\n"
    return "\n".join(to_text(obj)) + "\n"


def render_run(executed: list[Executed], fmt: str = TEXT) -> str:
    """Render a script run in statement order."""
    if fmt == JSON:
        items = [
            {
                "statement": format_statement(e.statement),
                "result": to_json(e.result) if e.result is not None else None,
            }
            for e in executed
        ]
        return json.dumps(items, indent=2) + "\n"
    out: list[str] = []
    for e in executed:
        out.append(f"> {format_statement(e.statement)}")
        if e.result is not None:
            out.extend("  " + line for line in to_text(e.result))
    return "".join(line + "\n" for line in out)
