"""
Parser for the ``.topo`` query language.

One statement per line (or separated by ``;``); ``#`` starts a comment::

    let U = paperU(a=1)
    open? ~QQ in michaelC
    measure ~U & (0,3) terms 100
    continuous? indicator(U) from michaelC

Names bound with ``let`` are substituted while parsing, so a parsed
:class:`Script` holds only resolved values. Every failure is a
:class:`ParseError` with a 1-based line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NoReturn, Union

from .continuity import StepFunction, indicator, overlap_witness
from .errors import ParseError, TopoError
from .exact import NEG_INF, POS_INF, ExtRational, Point, squarefree_split
from .measure import is_measurable_shape
from .sets import (
    EMPTY,
    FULL,
    IRRATIONALS,
    RATIONALS,
    SetExpr,
    Single,
    build_paper_u,
    complement,
    intersect,
    ival,
    union,
)
from .topology import MAX_UNIVERSE, TOPOLOGIES, TopologySpec, UnionMode

Value = Union[SetExpr, TopologySpec, StepFunction]

MAX_DEPTH = 100
MAX_DIGITS = 100
MAX_RADICAND = 10**6
MAX_TERMS = 10**6

_TOKEN_RE = re.compile(
    r"(?P<space>[ \t\r]+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<newline>\n)"
    r"|(?P<number>[0-9]+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*\??)"
    r"|(?P<arrow>->)"
    r"|(?P<symbol>[(){}\[\],|&~=+\-*/;])"
)

_CONSTANTS: dict[str, SetExpr] = {
    "QQ": RATIONALS,
    "II": IRRATIONALS,
    "RR": FULL,
    "empty": EMPTY,
}

RESERVED = frozenset(
    {
        "let", "in", "from", "terms", "mode", "inf", "sqrt", "else",
        "paperU", "indicator", "step",
        "measure", "decompose", "theorem1",
    }
    | set(_CONSTANTS)
    | set(TOPOLOGIES)
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class Let:
    name: str
    value: Value


@dataclass(frozen=True)
class Query:
    """A query statement.

    ``kind`` is one of isOpen, measure, member, decompose, continuous, axioms,
    theorem1. ``terms`` is None when the statement leaves the truncation to the
    configured default.
    """

    kind: str
    args: tuple
    terms: int | None = None


Statement = Union[Let, Query]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...] = ()


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup
        if kind == "newline":
            tokens.append(Token("newline", "\n", line, column))
            line, line_start = line + 1, match.end()
        elif kind in ("symbol", "arrow"):
            tokens.append(Token(match.group(), match.group(), line, column))
        elif kind in ("number", "name"):
            tokens.append(Token(kind, match.group(), line, column))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def _describe(tok: Token) -> str:
    if tok.kind == "end":
        return "end of input"
    if tok.kind == "newline":
        return "end of line"
    return repr(tok.text)


class _Parser:
    def __init__(self, tokens: list[Token], bindings: dict[str, Value]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.bindings = bindings
        self.depth = 0

    # -- token plumbing -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "end":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None) -> NoReturn:
        at = tok or self.tok
        raise ParseError(message, at.line, at.column)

    def accept(self, kind: str) -> Token | None:
        if self.tok.kind == kind:
            return self.advance()
        return None

    def expect(self, kind: str, what: str | None = None) -> Token:
        if self.tok.kind != kind:
            self.fail(f"expected {what or repr(kind)}, found {_describe(self.tok)}")
        return self.advance()

    def keyword(self, word: str) -> bool:
        if self.tok.kind == "name" and self.tok.text == word:
            self.advance()
            return True
        return False

    def expect_keyword(self, word: str) -> None:
        if not self.keyword(word):
            self.fail(f"expected {word!r}, found {_describe(self.tok)}")

    # -- statements -----------------------------------------------------------

    def script(self) -> Script:
        statements: list[Statement] = []
        while self.tok.kind != "end":
            if self.accept("newline") or self.accept(";"):
                continue
            statements.append(self.statement())
            if self.tok.kind not in ("newline", ";", "end"):
                self.fail(f"expected end of statement, found {_describe(self.tok)}")
        return Script(tuple(statements))

    def statement(self) -> Statement:
        tok = self.tok
        handlers = {
            "let": self.let,
            "open?": self.open_query,
            "measure": self.measure_query,
            "member?": self.member_query,
            "decompose": self.decompose_query,
            "continuous?": self.continuity_query,
            "axioms?": self.axioms_query,
            "theorem1": self.theorem_query,
        }
        handler = handlers.get(tok.text) if tok.kind == "name" else None
        if handler is None:
            self.fail(f"expected a statement, found {_describe(tok)}")
        self.advance()
        return handler()

    def let(self) -> Let:
        name_tok = self.expect("name", "a name")
        name = name_tok.text
        if name.endswith("?") or name in RESERVED:
            self.fail(f"{name!r} is reserved", name_tok)
        self.expect("=", "'='")
        value = self.value()
        self.bindings[name] = value
        return Let(name, value)

    def value(self) -> Value:
        tok = self.tok
        if tok.kind == "name":
            bound = self.bindings.get(tok.text)
            if tok.text in TOPOLOGIES or isinstance(bound, TopologySpec):
                return self.topology()
            if tok.text in ("indicator", "step") or isinstance(bound, StepFunction):
                return self.function()
        return self.set_expr()

    def terms(self) -> int | None:
        if not self.keyword("terms"):
            return None
        tok = self.expect("number", "a truncation depth")
        if len(tok.text) > 7 or not 1 <= int(tok.text) <= MAX_TERMS:
            self.fail(f"terms must be between 1 and {MAX_TERMS}", tok)
        return int(tok.text)

    def open_query(self) -> Query:
        s = self.set_expr()
        self.expect_keyword("in")
        t = self.topology()
        return Query("isOpen", (s, t), self.terms())

    def measure_query(self) -> Query:
        start = self.tok
        s = self.set_expr()
        try:
            measurable = is_measurable_shape(s)
        except TopoError:
            measurable = False
        if not measurable:
            self.fail(
                "type mismatch: no measure bounds for this set; intersect it "
                "with a bounded interval",
                start,
            )
        return Query("measure", (s,), self.terms())

    def member_query(self) -> Query:
        p = self.point()
        self.expect_keyword("in")
        s = self.set_expr()
        return Query("member", (p, s), self.terms())

    def decompose_query(self) -> Query:
        s = self.set_expr()
        return Query("decompose", (s,), self.terms())

    def continuity_query(self) -> Query:
        f = self.function()
        self.expect_keyword("from")
        t = self.topology()
        return Query("continuous", (f, t), self.terms())

    def axioms_query(self) -> Query:
        start = self.tok
        universe = self.elements()
        if len(universe) > MAX_UNIVERSE:
            self.fail(f"a universe may have at most {MAX_UNIVERSE} points", start)
        self.expect("[", "'['")
        collection: list[frozenset[str]] = []
        if not self.accept("]"):
            while True:
                sub_tok = self.tok
                subset = self.elements()
                if not subset <= universe:
                    self.fail("subset has points outside the universe", sub_tok)
                collection.append(subset)
                if self.accept(","):
                    continue
                self.expect("]", "',' or ']'")
                break
        mode = UnionMode.ARBITRARY
        if self.keyword("mode"):
            tok = self.expect("name", "arbitrary or countable")
            if tok.text not in ("arbitrary", "countable"):
                self.fail(f"unknown union mode {tok.text!r}", tok)
            mode = UnionMode(tok.text)
        return Query("axioms", (universe, tuple(collection), mode))

    def theorem_query(self) -> Query:
        a = Fraction(1)
        if self.tok.kind == "name" and self.tok.text == "a":
            self.advance()
            self.expect("=", "'='")
            tok = self.tok
            a = self.signed_rational()
            if a <= 0:
                self.fail("a must be positive", tok)
        return Query("theorem1", (a,), self.terms())

    # -- values ---------------------------------------------------------------

    def topology(self) -> TopologySpec:
        tok = self.expect("name", "a topology")
        if tok.text in TOPOLOGIES:
            return TOPOLOGIES[tok.text]
        bound = self.bindings.get(tok.text)
        if isinstance(bound, TopologySpec):
            return bound
        if bound is not None:
            self.fail(f"type mismatch: {tok.text!r} is not a topology", tok)
        self.fail(f"unknown topology {tok.text!r}", tok)

    def function(self) -> StepFunction:
        tok = self.tok
        if self.keyword("indicator"):
            self.expect("(", "'('")
            region = self.set_expr()
            self.expect(")", "')'")
            return indicator(region)
        if self.keyword("step"):
            return self.step_body(tok)
        if tok.kind == "name":
            bound = self.bindings.get(tok.text)
            if isinstance(bound, StepFunction):
                self.advance()
                return bound
            if bound is not None:
                self.fail(f"type mismatch: {tok.text!r} is not a function", tok)
            if tok.text not in RESERVED:
                self.fail(f"unknown identifier {tok.text!r}", tok)
        self.fail(f"expected indicator(...) or step(...), found {_describe(tok)}")

    def step_body(self, start: Token) -> StepFunction:
        self.expect("(", "'('")
        pieces: list[tuple[SetExpr, Fraction]] = []
        default = Fraction(0)
        if not self.accept(")"):
            while True:
                if self.keyword("else"):
                    self.expect("->", "'->'")
                    default = self.signed_rational()
                else:
                    region = self.set_expr()
                    self.expect("->", "'->'")
                    pieces.append((region, self.signed_rational()))
                if self.accept(","):
                    continue
                self.expect(")", "',' or ')'")
                break
        f = StepFunction(tuple(pieces), default)
        clash = overlap_witness(f)
        if clash is not None:
            self.fail(f"step regions overlap at {clash}", start)
        return f

    def elements(self) -> frozenset[str]:
        self.expect("{", "'{'")
        found: set[str] = set()
        if self.accept("}"):
            return frozenset()
        while True:
            tok = self.tok
            if tok.kind not in ("number", "name"):
                self.fail(f"expected a point name, found {_describe(tok)}")
            found.add(self.advance().text)
            if self.accept(","):
                continue
            self.expect("}", "',' or '}'")
            return frozenset(found)

    # -- set expressions ------------------------------------------------------

    def set_expr(self) -> SetExpr:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail(f"expression nested deeper than {MAX_DEPTH}")
        try:
            parts = [self.intersection()]
            while self.accept("|"):
                parts.append(self.intersection())
            return union(*parts)
        finally:
            self.depth -= 1

    def intersection(self) -> SetExpr:
        parts = [self.unary()]
        while self.accept("&"):
            parts.append(self.unary())
        return intersect(*parts)

    def unary(self) -> SetExpr:
        flips = 0
        while self.accept("~"):
            flips += 1
        s = self.atom()
        return complement(s) if flips % 2 else s

    def _interval_ahead(self) -> bool:
        nxt = self.peek()
        return nxt.kind in ("number", "-") or (
            nxt.kind == "name" and nxt.text in ("inf", "sqrt")
        )

    def atom(self) -> SetExpr:
        tok = self.tok
        if tok.kind == "(":
            if self._interval_ahead():
                return self.interval()
            self.advance()
            inner = self.set_expr()
            self.expect(")", "')'")
            return inner
        if tok.kind == "{":
            return self.point_set()
        if tok.kind == "name":
            if tok.text in _CONSTANTS:
                self.advance()
                return _CONSTANTS[tok.text]
            if tok.text == "paperU":
                return self.paper_u()
            bound = self.bindings.get(tok.text)
            if isinstance(bound, SetExpr):
                self.advance()
                return bound
            if bound is not None or tok.text in TOPOLOGIES:
                self.fail(f"type mismatch: {tok.text!r} is not a set", tok)
            self.fail(f"unknown identifier {tok.text!r}", tok)
        self.fail(f"expected a set, found {_describe(tok)}")

    def interval(self) -> SetExpr:
        self.expect("(")
        lo = self.endpoint()
        self.expect(",", "','")
        hi = self.endpoint()
        self.expect(")", "')'")
        return ival(lo, hi)

    def endpoint(self) -> ExtRational:
        start = self.tok
        if start.kind == "-" and self.peek().text == "inf":
            self.advance()
            self.advance()
            return NEG_INF
        if self.keyword("inf"):
            return POS_INF
        p = self.point()
        if not p.is_rational:
            self.fail("interval endpoints must be rational or infinite", start)
        return ExtRational(p.p)

    def point_set(self) -> SetExpr:
        self.expect("{")
        points: list[Point] = []
        if not self.accept("}"):
            while True:
                points.append(self.point())
                if self.accept(","):
                    continue
                self.expect("}", "',' or '}'")
                break
        return union(*(Single(p) for p in points))

    def paper_u(self) -> SetExpr:
        self.advance()
        self.expect("(", "'('")
        a = Fraction(1)
        tok = self.tok
        if tok.kind == "name" and tok.text == "a":
            self.advance()
            self.expect("=", "'='")
            tok = self.tok
            a = self.signed_rational()
        self.expect(")", "')'")
        if a <= 0:
            self.fail("paperU needs a > 0", tok)
        return build_paper_u(a)

    # -- numbers --------------------------------------------------------------

    def natural(self) -> int:
        tok = self.expect("number", "a number")
        if len(tok.text) > MAX_DIGITS:
            self.fail(f"number literal longer than {MAX_DIGITS} digits", tok)
        return int(tok.text)

    def rational(self) -> Fraction:
        num = self.natural()
        if not self.accept("/"):
            return Fraction(num)
        tok = self.tok
        den = self.natural()
        if den == 0:
            self.fail("division by zero", tok)
        return Fraction(num, den)

    def signed_rational(self) -> Fraction:
        negative = self.accept("-") is not None
        q = self.rational()
        return -q if negative else q

    def radicand(self) -> int:
        self.expect("(", "'('")
        tok = self.tok
        n = self.natural()
        if not 1 <= n <= MAX_RADICAND:
            self.fail(f"square root radicand must be between 1 and {MAX_RADICAND}", tok)
        self.expect(")", "')'")
        return n

    def term(self) -> tuple[Fraction, int]:
        if self.keyword("sqrt"):
            d = self.radicand()
            coef = Fraction(1)
            if self.accept("/"):
                tok = self.tok
                den = self.natural()
                if den == 0:
                    self.fail("division by zero", tok)
                coef = Fraction(1, den)
            return coef, d
        q = self.rational()
        if self.accept("*"):
            self.expect_keyword("sqrt")
            return q, self.radicand()
        return q, 1

    def point(self) -> Point:
        """A sum of rationals and rational multiples of one square root."""
        start = self.tok
        sign = -1 if self.accept("-") else 1
        rational = Fraction(0)
        surds: dict[int, Fraction] = {}
        while True:
            coef, d = self.term()
            k, m = squarefree_split(d)
            coef *= sign * k
            if m == 1:
                rational += coef
            else:
                surds[m] = surds.get(m, Fraction(0)) + coef
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        surds = {m: c for m, c in surds.items() if c}
        if len(surds) > 1:
            self.fail("a point may use only one square root radicand", start)
        if surds:
            ((m, c),) = surds.items()
            return Point(rational, c, m)
        return Point(rational)


def _decode(data: str | bytes) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        head = data[: exc.start]
        line = head.count(b"\n") + 1
        column = exc.start - (head.rfind(b"\n") + 1) + 1
        raise ParseError("invalid UTF-8", line, column) from exc


def parse(text: str | bytes, bindings: dict[str, Value] | None = None) -> Script:
    """Parse a whole script. ``bindings`` is updated with every ``let``."""
    env = {} if bindings is None else bindings
    return _Parser(tokenize(_decode(text)), env).script()


def parse_set(text: str, bindings: dict[str, Value] | None = None) -> SetExpr:
    """Parse a single set expression."""
    parser = _Parser(tokenize(text), dict(bindings or {}))
    while parser.accept("newline"):
        pass
    s = parser.set_expr()
    while parser.accept("newline"):
        pass
    if parser.tok.kind != "end":
        parser.fail(f"expected end of input, found {_describe(parser.tok)}")
    return s
