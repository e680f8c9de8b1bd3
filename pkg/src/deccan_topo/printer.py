"""
Formats sets, functions and scripts back into ``.topo`` source text.

For expressions built through the smart constructors in :mod:`deccan_topo.sets`
the output parses back to an equal value.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

from .continuity import StepFunction
from .errors import ShapeError
from .exact import Point
from .parser import Let, Query, Script, Statement
from .sets import (
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
)
from .topology import TopologySpec

_UNION, _INTERSECTION, _ATOM = 0, 1, 2


def format_point(p: Point) -> str:
    return str(p)


def _level(s: SetExpr) -> int:
    if isinstance(s, FiniteUnion):
        return _UNION
    if isinstance(s, Intersection):
        return _INTERSECTION
    return _ATOM


def _wrap(s: SetExpr, level: int) -> str:
    text = format_set(s)
    return f"({text})" if _level(s) < level else text


def format_set(s: SetExpr) -> str:
    if isinstance(s, Empty):
        return "empty"
    if isinstance(s, Full):
        return "RR"
    if isinstance(s, Rationals):
        return "QQ"
    if isinstance(s, Irrationals):
        return "II"
    if isinstance(s, Ival):
        return f"({s.interval.lo}, {s.interval.hi})"
    if isinstance(s, Single):
        return "{" + format_point(s.point) + "}"
    if isinstance(s, Family):
        return f"paperU(a={s.family.lengths.scale})"
    if isinstance(s, FiniteUnion):
        return " | ".join(_wrap(p, _INTERSECTION) for p in s.parts)
    if isinstance(s, Intersection):
        return " & ".join(_wrap(p, _ATOM) for p in s.parts)
    if isinstance(s, Complement):
        return "~" + _wrap(s.inner, _ATOM)
    raise ShapeError(f"cannot format {type(s).__name__}")


def format_function(f: StepFunction) -> str:
    if len(f.pieces) == 1 and f.pieces[0][1] == 1 and f.default == 0:
        return f"indicator({format_set(f.pieces[0][0])})"
    items = [f"{format_set(region)} -> {value}" for region, value in f.pieces]
    if f.default != 0 or not items:
        items.append(f"else -> {f.default}")
    return "step(" + ", ".join(items) + ")"


def _format_elements(items: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(items, key=lambda e: (len(e), e))) + "}"


def _terms(q: Query) -> str:
    return "" if q.terms is None else f" terms {q.terms}"


def format_value(value: SetExpr | TopologySpec | StepFunction) -> str:
    if isinstance(value, TopologySpec):
        return value.name
    if isinstance(value, StepFunction):
        return format_function(value)
    return format_set(value)


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, Let):
        return f"let {stmt.name} = {format_value(stmt.value)}"
    args = stmt.args
    if stmt.kind == "isOpen":
        body = f"open? {format_set(args[0])} in {args[1].name}"
    elif stmt.kind == "measure":
        body = f"measure {format_set(args[0])}"
    elif stmt.kind == "member":
        body = f"member? {format_point(args[0])} in {format_set(args[1])}"
    elif stmt.kind == "decompose":
        body = f"decompose {format_set(args[0])}"
    elif stmt.kind == "continuous":
        body = f"continuous? {format_function(args[0])} from {args[1].name}"
    elif stmt.kind == "axioms":
        universe, collection, mode = args
        subsets = ", ".join(_format_elements(s) for s in collection)
        body = f"axioms? {_format_elements(universe)} [{subsets}] mode {mode.value}"
    elif stmt.kind == "theorem1":
        a: Fraction = args[0]
        body = f"theorem1 a={a}"
    else:
        raise ShapeError(f"unknown query kind {stmt.kind!r}")
    return body + _terms(stmt)


def format_script(script: Script) -> str:
    return "".join(format_statement(s) + "\n" for s in script.statements)
