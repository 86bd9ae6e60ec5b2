"""Clopen algebra, the projection-valued measure, and integration."""

import pytest
from hypothesis import given

import strategies as strat
from ultraspec import (CANONICAL, INFINITE, INFINITY_POINT, Clopen,
                       NStarFunction, Scalar, ScalarMeasureView,
                       SpectralOperator, TaggedPartition, Vector,
                       apply_spectral, clopen_algebra, function_norm,
                       gram_schmidt, inner_product, integrate,
                       inverse_gelfand, matrix_rep, measure, op_norm,
                       refinement_chain, riemann_sum, to_matrix)
from ultraspec.errors import FamilyTooSmall, InvalidPartition

ONE = Scalar.one()
T = Scalar.t()
WINDOW = list(range(1, 9)) + [INFINITY_POINT]


def test_clopen_algebra_examples():
    assert (clopen_algebra("intersect", Clopen.finite([1, 2]),
                           Clopen.cofinite_of([2])) == Clopen.finite([1]))
    assert clopen_algebra("complement", Clopen.finite([3])) \
        == Clopen.cofinite_of([3])
    assert (clopen_algebra("union", Clopen.finite([1]),
                           Clopen.cofinite_of([1])) == Clopen.whole())


@given(strat.clopens(), strat.clopens())
def test_clopen_ops_match_pointwise_semantics(a, b):
    union, inter = a.union(b), a.intersect(b)
    comp = a.complement()
    for p in WINDOW:
        assert union.contains(p) == (a.contains(p) or b.contains(p))
        assert inter.contains(p) == (a.contains(p) and b.contains(p))
        assert comp.contains(p) != a.contains(p)


def test_measure_of_empty_and_whole():
    assert measure(Clopen.empty()) == SpectralOperator.zero()
    assert measure(Clopen.whole()) == SpectralOperator.unit()


def test_measure_of_finite_set():
    m = measure(Clopen.finite([1, 3]))
    assert m == (SpectralOperator.projection(1)
                 + SpectralOperator.projection(3))


def test_measure_of_cofinite_set():
    m = measure(Clopen.cofinite_of([2]))
    assert m == SpectralOperator.unit() - SpectralOperator.projection(2)


def test_measure_family_too_small():
    fam = gram_schmidt([Vector.of_rationals([1, 1])])
    with pytest.raises(FamilyTooSmall):
        measure(Clopen.finite([2]), fam)


@given(strat.clopens(), strat.clopens())
def test_measure_additive_and_multiplicative(a, b):
    disjoint = b.minus(a)
    assert measure(a.union(disjoint)) == measure(a) + measure(disjoint)
    assert measure(a.intersect(b)) == measure(a) * measure(b)


@given(strat.clopens())
def test_measure_is_projection_of_norm_one(c):
    m = measure(c)
    assert m * m == m
    if not c.is_empty:
        assert op_norm(m).val == 0


@given(strat.clopens(), strat.vectors(), strat.vectors())
def test_measure_is_normal_projection(c, x, z):
    m = measure(c)
    assert inner_product(x - apply_spectral(m, x),
                         apply_spectral(m, z)).is_zero


def test_riemann_sum_of_constant_function():
    part = TaggedPartition(((Clopen.finite([1]), 1),
                            (Clopen.cofinite_of([1]), INFINITY_POINT)))
    got = riemann_sum(NStarFunction.constant(ONE), part)
    assert got == SpectralOperator.unit()


def test_riemann_sum_two_pieces_exact():
    f = NStarFunction(ONE, Vector.of([T]))
    part = TaggedPartition(((Clopen.finite([1]), 1),
                            (Clopen.cofinite_of([1]), INFINITY_POINT)))
    got = riemann_sum(f, part)
    # (1+t)P1 + (Id - P1) = Id + t P1
    assert got == SpectralOperator(ONE, Vector.of([T]), CANONICAL)


def test_riemann_sum_coarse_partition_misses_by_valuation_one():
    f = NStarFunction(ONE, Vector.of([T]))
    coarse = TaggedPartition(((Clopen.whole(), INFINITY_POINT),))
    got = riemann_sum(f, coarse)
    assert got == SpectralOperator.unit()
    err = got - integrate(f, Clopen.whole())
    assert op_norm(err).val == 1


def test_partition_validation_errors():
    overlapping = TaggedPartition(((Clopen.finite([1, 2]), 1),
                                   (Clopen.finite([2]), 2)))
    with pytest.raises(InvalidPartition):
        overlapping.validate()
    tag_outside = TaggedPartition(((Clopen.finite([1]), 2),))
    with pytest.raises(InvalidPartition):
        tag_outside.validate()
    wrong_cover = TaggedPartition(((Clopen.finite([1]), 1),))
    with pytest.raises(InvalidPartition):
        wrong_cover.validate(Clopen.whole())
    inf_tag_in_finite_piece = TaggedPartition(
        ((Clopen.finite([1]), INFINITY_POINT),))
    with pytest.raises(InvalidPartition):
        inf_tag_in_finite_piece.validate()


def test_integrate_indicators_reproduce_the_measure():
    cases = [Clopen.empty(), Clopen.whole(), Clopen.finite([1, 3]),
             Clopen.cofinite_of([2])]
    for c in cases:
        eta = (NStarFunction.indicator_cofinite(c.base) if c.cofinite
               else NStarFunction.indicator_of_points(c.base))
        assert integrate(eta, Clopen.whole()) == measure(c)


def test_integrate_closed_form_cofinite():
    f = NStarFunction(ONE, Vector.of([T]))
    assert integrate(f, Clopen.whole()) \
        == SpectralOperator(ONE, Vector.of([T]), CANONICAL)


def test_integrate_over_empty_set():
    f = NStarFunction(ONE, Vector.of([T]))
    assert integrate(f, Clopen.empty()) == SpectralOperator.zero()


def test_integrate_restricts_to_the_piece():
    f = NStarFunction(ONE, Vector.of([T, Scalar.t(2)]))
    got = integrate(f, Clopen.finite([2, 5]))
    assert got == SpectralOperator(
        Scalar.zero(),
        Vector(((2, ONE + Scalar.t(2)), (5, ONE))), CANONICAL)


@given(strat.functions(), strat.clopens())
def test_refinement_chain_error_valuations_climb(f, c):
    closed = integrate(f, c)
    last = None
    for part in refinement_chain(f, c):
        part.validate(c)
        err = op_norm(riemann_sum(f, part) - closed).val
        if last is not None:
            assert err >= last
        last = err
    assert last == INFINITE


def test_scalar_measure_examples():
    view = ScalarMeasureView(Vector.basis(1), Vector.basis(1))
    assert view.value(Clopen.finite([1])) == ONE
    cross = ScalarMeasureView(Vector.basis(1), Vector.basis(2))
    assert cross.value(Clopen.finite([1])).is_zero
    assert view.value(Clopen.empty()).is_zero


@given(strat.vectors(), strat.vectors(), strat.clopens(), strat.clopens())
def test_scalar_measure_finitely_additive(x, y, a, b):
    view = ScalarMeasureView(x, y)
    disjoint = b.minus(a)
    assert view.value(a.union(disjoint)) \
        == view.value(a) + view.value(disjoint)


def test_scalar_integrate_examples():
    view = ScalarMeasureView(Vector.basis(1), Vector.basis(1))
    assert view.integrate(NStarFunction.indicator_of_points([1])) == ONE
    x = Vector.of([ONE, T])
    y = Vector.of([ONE, ONE])
    c = Scalar.rational(7)
    view2 = ScalarMeasureView(x, y)
    assert view2.integrate(NStarFunction.constant(c)) \
        == c * inner_product(x, y)
    cross = ScalarMeasureView(Vector.basis(1), Vector.basis(2))
    assert cross.integrate(NStarFunction.indicator_of_points([1])).is_zero


def test_matrix_rep_of_point_indicator():
    rep = matrix_rep(NStarFunction.indicator_of_points([2]), CANONICAL, 3)
    for i in range(1, 4):
        for j in range(1, 4):
            want = ONE if i == j == 2 else Scalar.zero()
            assert rep.entry(i, j) == want


def test_matrix_rep_of_cofinite_indicator():
    rep = matrix_rep(NStarFunction.indicator_cofinite([2]), CANONICAL, 3)
    for i in range(1, 4):
        for j in range(1, 4):
            if i == j:
                want = Scalar.zero() if i == 2 else ONE
            else:
                want = Scalar.zero()
            assert rep.entry(i, j) == want


def test_matrix_rep_of_constant_is_identity():
    rep = matrix_rep(NStarFunction.constant(ONE), CANONICAL, 3)
    assert all(rep.entry(i, j) == (ONE if i == j else Scalar.zero())
               for i in range(1, 4) for j in range(1, 4))


@given(strat.functions())
def test_matrix_rep_agrees_with_direct_matrix(f):
    n = max(f.deviations.max_index, 1) + 2
    rep = matrix_rep(f, CANONICAL, n)
    direct = to_matrix(inverse_gelfand(f, CANONICAL), n)
    assert all(rep.entry(i, j) == direct.entry(i, j)
               for i in range(1, n + 1) for j in range(1, n + 1))
    assert rep.norm() == function_norm(f)


def test_matrix_rep_on_rank_one_family():
    fam = gram_schmidt([Vector.of_rationals([1, 1])])
    f = NStarFunction.indicator_of_points([1])
    rep = matrix_rep(f, fam, 3)
    direct = to_matrix(inverse_gelfand(f, fam), 3)
    assert all(rep.entry(i, j) == direct.entry(i, j)
               for i in range(1, 4) for j in range(1, 4))
    half = Scalar.rational("1/2")
    assert rep.entry(1, 1) == half and rep.entry(1, 2) == half
