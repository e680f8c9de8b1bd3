import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.abspath("src"))

from deccan_topo.continuity import StepFunction, indicator
from deccan_topo.errors import ParseError
from deccan_topo.exact import NEG_INF, POS_INF, Interval, Point
from deccan_topo.parser import Let, Query, parse, parse_set, tokenize
from deccan_topo.printer import format_script, format_set
from deccan_topo.sets import (
    EMPTY,
    FULL,
    IRRATIONALS,
    RATIONALS,
    FiniteUnion,
    Ival,
    build_paper_u,
    complement,
    intersect,
    ival,
    single,
    union,
)
from deccan_topo.topology import MICHAEL, MICHAEL_C, USUAL, UnionMode

F = Fraction


@pytest.mark.compliance
def test_open_query_on_irrationals() -> None:
    script = parse("open? ~QQ in michaelC")
    assert script.statements == (Query("isOpen", (IRRATIONALS, MICHAEL_C), None),)


@pytest.mark.compliance
def test_union_of_two_intervals() -> None:
    assert parse_set("(0,2)|(1,3)") == FiniteUnion(
        (Ival(Interval.of(0, 2)), Ival(Interval.of(1, 3)))
    )


@pytest.mark.compliance
def test_unbalanced_paren_reports_column() -> None:
    with pytest.raises(ParseError) as info:
        parse("open? (0,1 in usual")
    assert (info.value.line, info.value.column) == (1, 12)
    assert str(info.value).startswith("line 1, column 12:")


@pytest.mark.compliance
def test_measure_of_rationals_is_a_type_mismatch() -> None:
    with pytest.raises(ParseError, match="type mismatch"):
        parse("measure QQ")
    script = parse("measure QQ & (0,1) terms 5")
    assert script.statements[0].terms == 5


@pytest.mark.unit
def test_precedence_and_grouping() -> None:
    assert parse_set("~(0,1) & (2,3) | {5}") == union(
        intersect(complement(ival(0, 1)), ival(2, 3)), single(5)
    )
    assert parse_set("~((0,1) | (2,3))") == complement(union(ival(0, 1), ival(2, 3)))
    expected = union(ival(NEG_INF, 0), ival(1, POS_INF))
    assert parse_set("(-inf, 0) | (1, inf)") == expected


@pytest.mark.unit
def test_constants_and_family() -> None:
    assert parse_set("QQ") == RATIONALS
    assert parse_set("~II") == RATIONALS
    assert parse_set("RR") == FULL
    assert parse_set("empty | {}") == EMPTY
    assert parse_set("(3, 1)") == EMPTY
    assert parse_set("paperU()") == build_paper_u(1)
    assert parse_set("paperU(a=1/2)") == build_paper_u(F(1, 2))


@pytest.mark.unit
def test_points_with_square_roots() -> None:
    (q,) = parse("member? 1/2 + 3/4*sqrt(8) in (0,5)").statements
    assert q.args[0] == Point.surd(F(1, 2), F(3, 2), 2)
    assert parse_set("{sqrt(2)/2}") == single(Point.surd(0, F(1, 2), 2))
    assert parse_set("{-sqrt(3) + 1}") == single(Point.surd(1, -1, 3))
    assert parse_set("{sqrt(4)}") == single(2)


@pytest.mark.unit
def test_let_bindings_are_substituted() -> None:
    script = parse("let A = (0,1)\nlet T = michael\nopen? A | {2} in T")
    assert script.statements[0] == Let("A", ival(0, 1))
    assert script.statements[1] == Let("T", MICHAEL)
    expected = Query("isOpen", (union(ival(0, 1), single(2)), MICHAEL))
    assert script.statements[2] == expected


@pytest.mark.unit
def test_functions() -> None:
    (q,) = parse("continuous? indicator(paperU(a=1)) from michaelC").statements
    assert q == Query("continuous", (indicator(build_paper_u(1)), MICHAEL_C))
    text = "continuous? step((0,1) -> 2, {5} -> -1/2, else -> 1) from usual"
    (q,) = parse(text).statements
    assert q.args[0] == StepFunction(
        ((ival(0, 1), F(2)), (single(5), F(-1, 2))), F(1)
    )
    assert q.args[1] == USUAL


@pytest.mark.unit
def test_axioms_and_theorem_queries() -> None:
    (q,) = parse("axioms? {1,2,3} [{}, {1}, {1,2,3}] mode countable").statements
    universe, collection, mode = q.args
    assert universe == frozenset({"1", "2", "3"})
    assert collection == (frozenset(), frozenset({"1"}), universe)
    assert mode is UnionMode.COUNTABLE
    (q,) = parse("theorem1 a=1/2 terms 10").statements
    assert q == Query("theorem1", (F(1, 2),), 10)
    assert parse("theorem1").statements == (Query("theorem1", (F(1),), None),)


@pytest.mark.unit
def test_comments_and_separators() -> None:
    script = parse("# header\n\nopen? QQ in usual ; measure (0,1) # trailing\n")
    assert [s.kind for s in script.statements] == ["isOpen", "measure"]


@pytest.mark.unit
@pytest.mark.parametrize(
    "text, message",
    [
        ("open? B in usual", "unknown identifier"),
        ("open? (0,1) in hausdorff", "unknown topology"),
        ("let T = usual\nopen? T in usual", "type mismatch"),
        ("let in = (0,1)", "reserved"),
        ("continuous? step((0,2) -> 1, (1,3) -> 2) from usual", "overlap"),
        ("open? (0, sqrt(2)) in usual", "endpoints must be rational"),
        ("member? sqrt(2) + sqrt(3) in QQ", "one square root"),
        ("axioms? {1,2} [{3}]", "outside the universe"),
        ("theorem1 a=0", "positive"),
        ("open? paperU(a=-1) in usual", "a > 0"),
        ("frobnicate", "expected a statement"),
        ("open? QQ in usual usual", "end of statement"),
    ],
)
def test_structured_errors(text: str, message: str) -> None:
    with pytest.raises(ParseError, match=message):
        parse(text)


@pytest.mark.unit
def test_error_position_on_later_line() -> None:
    with pytest.raises(ParseError) as info:
        parse("open? QQ in usual\nmeasure (0,1) | Z")
    assert (info.value.line, info.value.column) == (2, 17)


@pytest.mark.unit
def test_tokenizer_positions() -> None:
    toks = tokenize("open? (0,1)\n~QQ")
    got = [(t.kind, t.column) for t in toks[:3]]
    assert got == [("name", 1), ("(", 7), ("number", 8)]
    assert toks[-2].line == 2


@pytest.mark.unit
def test_printer_output() -> None:
    u = build_paper_u(1)
    assert format_set(intersect(complement(u), ival(0, 3))) == "~paperU(a=1) & (0, 3)"
    assert format_set(intersect(union(ival(0, 1), single(5)), RATIONALS)) == (
        "((0, 1) | {5}) & QQ"
    )
    text = "let U = paperU(a=1)\ncontinuous? indicator(U) from michaelC terms 50\n"
    assert format_script(parse(text)) == (
        "let U = paperU(a=1)\n"
        "continuous? indicator(paperU(a=1)) from michaelC terms 50\n"
    )
