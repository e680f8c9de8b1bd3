import os
import sys
from dataclasses import replace
from fractions import Fraction
from itertools import chain, combinations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath("src"))

from deccan_topo.errors import PreconditionError
from deccan_topo.exact import ExtRational, Interval, Point
from deccan_topo.sets import (
    EMPTY,
    FULL,
    IRRATIONALS,
    RATIONALS,
    build_paper_u,
    complement,
    intersect,
    ival,
    single,
    union,
)
from deccan_topo.topology import (
    BASIS_UNION,
    FINITE_INTERSECTION,
    FINITE_UNION,
    INTERIOR,
    MICHAEL,
    MICHAEL_C,
    R0,
    R1,
    R2,
    SINGLETONS,
    TOPOLOGIES,
    TRIVIAL,
    USUAL,
    USUAL_C,
    Cardinality,
    UnionMode,
    Verdict,
    avoids_rationals,
    cardinality,
    covers_rationals,
    is_open,
    replay_openness,
    verify_axioms,
    within_rationals,
)

F = Fraction
SQRT2 = Point.surd(0, 1, 2)
U = build_paper_u(1)
ALL = (USUAL, USUAL_C, MICHAEL, MICHAEL_C)


def certify(s, t, n=100):
    cert = is_open(s, t, n)
    assert replay_openness(cert)
    return cert


@pytest.mark.unit
def test_topology_names() -> None:
    assert set(TOPOLOGIES) == {"usual", "usualC", "michael", "michaelC"}
    assert MICHAEL_C.arbitrary == MICHAEL
    assert USUAL_C.union_mode is UnionMode.COUNTABLE


@pytest.mark.unit
def test_empty_and_full_are_open_everywhere() -> None:
    for t in ALL:
        for s in (EMPTY, FULL):
            cert = certify(s, t)
            assert cert.verdict is Verdict.OPEN
            assert cert.rule == TRIVIAL


@pytest.mark.compliance
def test_irrationals_open_in_michael_not_in_michael_c() -> None:
    cert = certify(IRRATIONALS, MICHAEL)
    assert cert.verdict is Verdict.OPEN
    assert cert.rule == SINGLETONS
    cert = certify(IRRATIONALS, MICHAEL_C)
    assert cert.verdict is Verdict.NOT_OPEN
    assert cert.rule == R1
    assert cert.evidence.cardinality.kind is Cardinality.UNCOUNTABLE


@pytest.mark.compliance
def test_irrationals_not_usual_open() -> None:
    cert = certify(IRRATIONALS, USUAL)
    assert (cert.verdict, cert.rule) == (Verdict.NOT_OPEN, R0)
    cert = certify(IRRATIONALS, USUAL_C)
    assert (cert.verdict, cert.rule) == (Verdict.NOT_OPEN, R2)
    assert cert.evidence.premise.topology == USUAL


@pytest.mark.compliance
def test_rationals_open_nowhere() -> None:
    for t in ALL:
        cert = certify(RATIONALS, t)
        assert cert.verdict is Verdict.NOT_OPEN
    cert = is_open(RATIONALS, MICHAEL)
    assert cert.rule == R0
    assert cert.evidence.witness_point == Point.rational(0)


@pytest.mark.unit
def test_intervals_and_their_complements() -> None:
    cert = certify(ival(0, 1), USUAL)
    assert (cert.verdict, cert.rule) == (Verdict.OPEN, BASIS_UNION)
    assert cert.evidence.intervals == (Interval.of(0, 1),)
    cert = certify(complement(ival(0, 1)), USUAL)
    assert (cert.verdict, cert.rule) == (Verdict.NOT_OPEN, R0)
    assert cert.evidence.witness_point == Point.rational(0)


@pytest.mark.unit
def test_irrational_singleton_is_michael_open_only() -> None:
    s = single(SQRT2)
    for t in (MICHAEL, MICHAEL_C):
        cert = certify(s, t)
        assert cert.verdict is Verdict.OPEN
        assert cert.evidence.points == (SQRT2,)
    for t in (USUAL, USUAL_C):
        assert certify(s, t).verdict is Verdict.NOT_OPEN
    for t in ALL:
        assert certify(single(1), t).verdict is Verdict.NOT_OPEN


@pytest.mark.unit
def test_interval_with_irrational_point_added() -> None:
    s = union(ival(0, 1), single(SQRT2))
    assert certify(s, MICHAEL).verdict is Verdict.OPEN
    assert certify(s, USUAL).verdict is Verdict.NOT_OPEN


@pytest.mark.unit
@pytest.mark.parametrize("t", ALL, ids=str)
def test_irrational_boundary_is_certified_from_the_cell_scan(t) -> None:
    s = intersect(ival(0, 3), complement(single(SQRT2)))
    cert = certify(s, t)
    assert (cert.verdict, cert.rule) == (Verdict.OPEN, INTERIOR)
    forged = replace(cert, subject=union(s, single(3)))
    assert not replay_openness(forged)


@pytest.mark.unit
def test_isolated_irrational_point_is_still_a_usual_boundary() -> None:
    s = union(ival(0, 1), single(Point.surd(2, 1, 2)))
    assert certify(s, USUAL).rule == R0
    assert certify(s, MICHAEL).verdict is Verdict.OPEN


@pytest.mark.unit
@pytest.mark.parametrize("t", ALL, ids=str)
def test_finite_intersection_of_open_parts_is_open(t) -> None:
    s = intersect(U, ival(0, 1))
    cert = certify(s, t)
    assert (cert.verdict, cert.rule) == (Verdict.OPEN, FINITE_INTERSECTION)
    parts = cert.evidence.parts
    assert [p.subject for p in parts] == list(s.parts)
    assert all(p.verdict is Verdict.OPEN and p.topology == t for p in parts)


@pytest.mark.unit
def test_finite_intersection_replay_checks_every_part() -> None:
    cert = certify(intersect(U, ival(0, 1)), MICHAEL_C)
    first, second = cert.evidence.parts

    def with_parts(*parts):
        return replace(cert, evidence=replace(cert.evidence, parts=parts))

    assert not replay_openness(with_parts(first))
    assert not replay_openness(with_parts(second, first))
    assert not replay_openness(with_parts(replace(first, topology=USUAL), second))
    not_open = is_open(single(F(1, 2)), MICHAEL_C)
    assert not replay_openness(with_parts(first, not_open))
    assert not replay_openness(replace(cert, rule=FINITE_UNION))


@pytest.mark.unit
def test_union_over_an_intersection_keeps_part_certificates() -> None:
    s = union(intersect(U, ival(0, 1)), ival(5, 6))
    cert = certify(s, USUAL_C)
    assert (cert.verdict, cert.rule) == (Verdict.OPEN, FINITE_UNION)
    assert [p.rule for p in cert.evidence.parts] == [
        certify(p, USUAL_C).rule for p in s.parts
    ]
    assert FINITE_INTERSECTION in {p.rule for p in cert.evidence.parts}


@pytest.mark.unit
def test_intersection_with_a_non_open_part_is_not_certified_open() -> None:
    cert = certify(intersect(U, complement(ival(0, 1))), USUAL)
    assert cert.rule != FINITE_INTERSECTION
    assert cert.verdict is not Verdict.OPEN


@pytest.mark.compliance
def test_paper_u_is_open_in_all_four() -> None:
    for t in ALL:
        cert = certify(U, t)
        assert (cert.verdict, cert.rule) == (Verdict.OPEN, BASIS_UNION)
        assert cert.evidence.families == (U.family,)


@pytest.mark.compliance
def test_complement_of_u() -> None:
    s = complement(U)
    assert certify(s, MICHAEL).verdict is Verdict.OPEN
    cert = certify(s, MICHAEL_C)
    assert (cert.verdict, cert.rule) == (Verdict.NOT_OPEN, R1)
    assert cert.evidence.measure.lower >= ExtRational.of(2)
    assert certify(s, USUAL).rule == R0
    assert certify(s, USUAL_C).rule == R2


@pytest.mark.unit
def test_finite_union_rule_merges_evidence() -> None:
    cert = certify(union(U, ival(5, 6)), USUAL)
    assert (cert.verdict, cert.rule) == (Verdict.OPEN, FINITE_UNION)
    assert cert.evidence.intervals == (Interval.of(5, 6),)
    assert cert.evidence.families == (U.family,)
    cert = certify(union(IRRATIONALS, ival(0, 1)), MICHAEL)
    assert cert.rule == FINITE_UNION


@pytest.mark.unit
def test_structural_predicates() -> None:
    assert avoids_rationals(complement(U))
    assert avoids_rationals(intersect(IRRATIONALS, ival(0, 1)))
    assert covers_rationals(union(U, ival(0, 1)))
    assert within_rationals(union(RATIONALS, single(F(1, 2))))
    assert not within_rationals(single(SQRT2))
    assert not avoids_rationals(ival(0, 1))


@pytest.mark.unit
def test_cardinality_classes() -> None:
    c = cardinality(union(single(1), single(SQRT2)))
    assert (c.kind, c.count) == (Cardinality.FINITE, 2)
    assert cardinality(EMPTY).count == 0
    assert cardinality(RATIONALS).kind is Cardinality.COUNTABLY_INFINITE
    c = cardinality(union(RATIONALS, single(SQRT2)))
    assert c.kind is Cardinality.COUNTABLY_INFINITE
    assert cardinality(ival(0, 1)).kind is Cardinality.UNCOUNTABLE
    assert cardinality(IRRATIONALS).kind is Cardinality.UNCOUNTABLE
    c = cardinality(complement(U), 50)
    assert c.kind is Cardinality.UNCOUNTABLE
    assert c.measure.window == Interval.of(0, 3)
    c = cardinality(intersect(IRRATIONALS, ival(0, 1)))
    assert c.kind is Cardinality.UNCOUNTABLE
    assert str(cardinality(intersect(single(1), ival(0, 2)))) == "Finite(1)"


@pytest.mark.unit
def test_windowed_irrationals_not_michael_c_open() -> None:
    cert = certify(intersect(IRRATIONALS, ival(0, 1)), MICHAEL_C)
    assert (cert.verdict, cert.rule) == (Verdict.NOT_OPEN, R1)


@pytest.mark.unit
def test_replay_rejects_tampered_certificates() -> None:
    cert = is_open(IRRATIONALS, MICHAEL)
    forged = replace(cert, topology=MICHAEL_C)
    assert not replay_openness(forged)
    cert = is_open(ival(0, 1), USUAL)
    forged = replace(cert, subject=ival(0, 2))
    assert not replay_openness(forged)
    cert = is_open(complement(U), MICHAEL_C, 50)
    forged = replace(cert, topology=MICHAEL)
    assert not replay_openness(forged)


def _endpoint():
    return st.fractions(min_value=-20, max_value=20, max_denominator=20)


@st.composite
def interval_sets(draw):
    parts = []
    for _ in range(draw(st.integers(1, 8))):
        a, b = draw(_endpoint()), draw(_endpoint())
        parts.append(ival(min(a, b), max(a, b)))
    s = union(*parts)
    if draw(st.booleans()):
        s = complement(s)
    if draw(st.booleans()):
        s = union(s, single(draw(_endpoint())))
    return s


@pytest.mark.fuzz
@settings(
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(s=interval_sets())
def test_countable_and_arbitrary_agree_on_usual_basis(s) -> None:
    assert is_open(s, USUAL).verdict is is_open(s, USUAL_C).verdict


@pytest.mark.compliance
def test_usual_modes_agree_on_paper_u() -> None:
    assert is_open(U, USUAL).verdict is is_open(U, USUAL_C).verdict


@pytest.mark.compliance
def test_axiom_two_violation_witness() -> None:
    report = verify_axioms({1, 2, 3}, [set(), {1}, {2}, {1, 2, 3}])
    assert not report.valid
    (v,) = report.violations
    assert v.axiom == 2
    assert v.witness == (frozenset({1}), frozenset({2}))
    assert v.result == frozenset({1, 2})


@pytest.mark.unit
def test_axiom_one_violation() -> None:
    report = verify_axioms({1, 2}, [{1}, {1, 2}])
    assert [v.axiom for v in report.violations] == [1]
    assert report.violations[0].witness == (frozenset(),)


@pytest.mark.unit
def test_axiom_verifier_preconditions() -> None:
    with pytest.raises(PreconditionError):
        verify_axioms(range(21), [])
    with pytest.raises(PreconditionError):
        verify_axioms({1, 2}, [{3}])


def _powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


@pytest.mark.compliance
def test_twenty_nine_topologies_on_three_points() -> None:
    universe = frozenset({1, 2, 3})
    middle = [frozenset(s) for s in _powerset(universe) if 0 < len(s) < 3]
    counts = {UnionMode.ARBITRARY: 0, UnionMode.COUNTABLE: 0}
    for chosen in _powerset(middle):
        collection = [frozenset(), universe, *chosen]
        verdicts = set()
        for mode in counts:
            report = verify_axioms(universe, collection, mode)
            verdicts.add(report.valid)
            counts[mode] += report.valid
        assert len(verdicts) == 1
    assert counts == {UnionMode.ARBITRARY: 29, UnionMode.COUNTABLE: 29}
