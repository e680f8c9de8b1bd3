import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath("src"))

from deccan_topo.errors import PreconditionError, ShapeError
from deccan_topo.exact import NEG_INF, POS_INF, ExtRational, Interval, Point
from deccan_topo.sets import (
    EMPTY,
    FULL,
    IRRATIONALS,
    RATIONALS,
    FiniteUnion,
    Truth,
    build_paper_u,
    canonicalize,
    complement,
    decompose_open,
    intersect,
    ival,
    member,
    normalize,
    single,
    union,
)
from deccan_topo.topology import probe_grid

F = Fraction
SQRT2 = Point.surd(0, 1, 2)
U = build_paper_u(1)


@pytest.mark.unit
def test_kleene_truth_tables() -> None:
    assert (Truth.IN & Truth.UNKNOWN) is Truth.UNKNOWN
    assert (Truth.OUT & Truth.UNKNOWN) is Truth.OUT
    assert (Truth.IN | Truth.UNKNOWN) is Truth.IN
    assert (Truth.OUT | Truth.UNKNOWN) is Truth.UNKNOWN
    assert ~Truth.UNKNOWN is Truth.UNKNOWN
    assert ~Truth.IN is Truth.OUT


@pytest.mark.unit
def test_smart_constructors() -> None:
    a, b, c = ival(0, 1), ival(2, 3), single(5)
    assert union(EMPTY, a) == a
    assert union(a, FULL) == FULL
    assert intersect(FULL, a) == a
    assert intersect(a, EMPTY) == EMPTY
    assert union(union(a, b), c) == FiniteUnion((a, b, c))
    assert union(a, b, a) == FiniteUnion((a, b))
    assert complement(complement(a)) == a
    assert complement(RATIONALS) == IRRATIONALS
    assert complement(EMPTY) == FULL
    assert ival(1, 0) == EMPTY
    assert ival(NEG_INF, POS_INF) == FULL


@pytest.mark.unit
def test_membership_in_basic_sets() -> None:
    assert member(F(1, 2), ival(0, 1)) is Truth.IN
    assert member(0, ival(0, 1)) is Truth.OUT
    assert member(SQRT2, IRRATIONALS) is Truth.IN
    assert member(SQRT2, single(SQRT2)) is Truth.IN
    assert member(F(1, 3), complement(RATIONALS)) is Truth.OUT
    assert member(3, union(ival(0, 1), single(3))) is Truth.IN


@pytest.mark.unit
def test_family_membership_is_never_out() -> None:
    assert member(F(7, 3), U) is Truth.IN
    assert member(F(7, 3), complement(U)) is Truth.OUT
    # sqrt(2) misses U_1 = (-1/4, 1/4), so one term settles nothing.
    assert member(SQRT2, U, 1) is Truth.UNKNOWN
    assert member(Point.surd(0, F(1, 100), 2), U, 1) is Truth.IN
    for p in (SQRT2, Point.surd(3, -1, 5), Point.surd(F(1, 7), 2, 3)):
        assert member(p, U, 200) is not Truth.OUT


@pytest.mark.unit
def test_truncation_must_be_positive() -> None:
    with pytest.raises(PreconditionError):
        member(0, U, 0)
    with pytest.raises(PreconditionError):
        build_paper_u(0)


@pytest.mark.unit
def test_normalize_merges_overlaps_only() -> None:
    out = normalize([Interval.of(1, 3), Interval.of(0, 2), Interval.of(5, 6)])
    assert out.intervals == (Interval.of(0, 3), Interval.of(5, 6))
    abutting = normalize([Interval.of(0, 1), Interval.of(1, 2)])
    assert abutting.intervals == (Interval.of(0, 1), Interval.of(1, 2))


@pytest.mark.unit
def test_canonicalize_absorbs_shared_endpoint() -> None:
    c = canonicalize(union(ival(0, 1), single(1), ival(1, 2)))
    assert c.intervals == (Interval.of(0, 2),)
    assert c.points == ()


@pytest.mark.unit
def test_canonicalize_punctured_interval_and_isolated_point() -> None:
    c = canonicalize(intersect(ival(0, 3), complement(single(1))))
    assert c.intervals == (Interval.of(0, 1), Interval.of(1, 3))
    c = canonicalize(union(ival(0, 1), single(5), single(SQRT2)))
    assert c.intervals == (Interval.of(0, 1),)
    assert c.points == (SQRT2, Point.rational(5))
    c = canonicalize(complement(ival(0, 1)))
    assert c.intervals == (
        Interval(NEG_INF, ExtRational.of(0)),
        Interval(ExtRational.of(1), POS_INF),
    )
    assert c.points == (Point.rational(0), Point.rational(1))


@pytest.mark.unit
def test_canonicalize_rejects_irrational_boundary() -> None:
    with pytest.raises(ShapeError):
        canonicalize(complement(single(SQRT2)))


@pytest.mark.unit
def test_decompose_open_with_witnesses() -> None:
    d = decompose_open(union(ival(0, 2), ival(1, 3), ival(5, 6)))
    assert d.canonical.intervals == (Interval.of(0, 3), Interval.of(5, 6))
    assert d.witnesses == (F(1), F(11, 2))
    assert d.exact


@pytest.mark.unit
def test_decompose_open_truncated_family() -> None:
    d = decompose_open(U, 3)
    assert d.canonical.intervals == (
        Interval.of(F(-17, 16), F(-15, 16)),
        Interval.of(F(-1, 4), F(1, 4)),
        Interval.of(F(7, 8), F(9, 8)),
    )
    assert d.witnesses == (F(-1), F(0), F(1))
    assert not d.exact


@pytest.mark.unit
def test_decompose_open_rejects_non_interval_unions() -> None:
    with pytest.raises(ShapeError):
        decompose_open(complement(ival(0, 1)))
    with pytest.raises(ShapeError):
        decompose_open(RATIONALS)


def _endpoint():
    return st.fractions(min_value=-50, max_value=50, max_denominator=50)


@st.composite
def interval_unions(draw, max_size: int = 20):
    parts = []
    for _ in range(draw(st.integers(1, max_size))):
        a, b = draw(_endpoint()), draw(_endpoint())
        parts.append(ival(min(a, b), max(a, b)))
    return union(*parts)


EXTENSION = F(1, 1024)


def _extension_midpoints(ivs):
    """Midpoints of the 1/1024-extensions past each finite end, cut at the
    neighboring interval so that they fall in a gap of the union."""
    for k, iv in enumerate(ivs):
        if iv.lo.is_finite:
            stop = iv.lo.value - EXTENSION
            if k > 0:
                stop = max(stop, ivs[k - 1].hi.value)
            if stop < iv.lo.value:
                yield (stop + iv.lo.value) / 2
        if iv.hi.is_finite:
            stop = iv.hi.value + EXTENSION
            if k + 1 < len(ivs):
                stop = min(stop, ivs[k + 1].lo.value)
            if stop > iv.hi.value:
                yield (iv.hi.value + stop) / 2


@pytest.mark.fuzz
@settings(
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(s=interval_unions())
def test_decomposition_is_disjoint_maximal_and_witnessed(s) -> None:
    d = decompose_open(s)
    ivs = d.canonical.intervals
    for left, right in zip(ivs, ivs[1:]):
        assert left.hi <= right.lo
    for iv, q in zip(ivs, d.witnesses):
        assert iv.contains(Point.rational(q))
        for end in (iv.lo, iv.hi):
            if end.is_finite:
                assert member(end.value, s) is Truth.OUT
    for x in _extension_midpoints(ivs):
        assert member(x, s) is Truth.OUT
    assert len(set(d.witnesses)) == len(d.witnesses)


@pytest.mark.fuzz
@settings(
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(s=interval_unions())
def test_decomposition_matches_input_on_rational_grid(s) -> None:
    rebuilt = decompose_open(s).canonical.to_expr()
    for x in probe_grid(s):
        assert member(x, s) is member(x, rebuilt)


@st.composite
def finite_sets(draw, depth: int = 3):
    if depth == 0 or draw(st.booleans()):
        a, b = draw(_endpoint()), draw(_endpoint())
        choice = draw(st.integers(0, 2))
        if choice == 0:
            return ival(min(a, b), max(a, b))
        if choice == 1:
            return single(a)
        return single(Point.surd(a, 1, 2))
    left, right = draw(finite_sets(depth=depth - 1)), draw(finite_sets(depth=depth - 1))
    op = draw(st.integers(0, 2))
    if op == 0:
        return union(left, right)
    if op == 1:
        return intersect(left, right)
    return complement(left)


@pytest.mark.fuzz
@settings(max_examples=150, deadline=None)
@given(s=finite_sets())
def test_canonical_form_is_pointwise_equal(s) -> None:
    try:
        c = canonicalize(s)
    except ShapeError:
        return
    rebuilt = c.to_expr()
    for x in probe_grid(s):
        assert member(x, s) is member(x, rebuilt)


@pytest.mark.fuzz
@settings(max_examples=150, deadline=None)
@given(a=finite_sets(), b=finite_sets())
def test_de_morgan_holds_pointwise(a, b) -> None:
    left = complement(union(a, b))
    right = intersect(complement(a), complement(b))
    for x in probe_grid(a, b):
        assert member(x, left) is member(x, right)


@st.composite
def interval_lists(draw):
    out = []
    for _ in range(draw(st.integers(0, 12))):
        a, b = draw(_endpoint()), draw(_endpoint())
        if a != b:
            out.append(Interval.of(min(a, b), max(a, b)))
    return out


@pytest.mark.fuzz
@settings(max_examples=300, deadline=None)
@given(ivs=interval_lists())
def test_normalize_is_idempotent(ivs) -> None:
    once = normalize(ivs)
    assert normalize(once.intervals) == once


def _points():
    rational = _endpoint().map(Point.rational)
    surd = st.builds(
        Point.surd,
        _endpoint(),
        st.sampled_from([F(1), F(-1), F(1, 3)]),
        st.sampled_from([2, 3, 5]),
    )
    return st.one_of(rational, surd)


@st.composite
def family_sets(draw, depth: int = 3):
    if depth == 0 or draw(st.booleans()):
        choice = draw(st.integers(0, 3))
        if choice == 0:
            a, b = draw(_endpoint()), draw(_endpoint())
            return ival(min(a, b), max(a, b))
        if choice == 1:
            return single(draw(_points()))
        if choice == 2:
            return draw(st.sampled_from([RATIONALS, IRRATIONALS]))
        return build_paper_u(draw(st.sampled_from([F(1), F(1, 4), F(3)])))
    left = draw(family_sets(depth=depth - 1))
    right = draw(family_sets(depth=depth - 1))
    op = draw(st.integers(0, 2))
    if op == 0:
        return union(left, right)
    if op == 1:
        return intersect(left, right)
    return complement(left)


@pytest.mark.fuzz
@settings(
    max_examples=300,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(
    x=_points(),
    s=family_sets(),
    n=st.integers(1, 40),
    extra=st.integers(0, 200),
)
def test_membership_is_stable_as_truncation_grows(x, s, n, extra) -> None:
    coarse = member(x, s, n)
    fine = member(x, s, n + extra)
    if coarse is not Truth.UNKNOWN:
        assert fine is coarse


@pytest.mark.fuzz
@settings(
    max_examples=300,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(x=_points(), a=family_sets(), b=family_sets(), n=st.integers(1, 30))
def test_union_and_intersection_follow_kleene_logic(x, a, b, n) -> None:
    left, right = member(x, a, n), member(x, b, n)
    assert member(x, union(a, b), n) is (left | right)
    assert member(x, intersect(a, b), n) is (left & right)
    assert member(x, complement(a), n) is ~left
