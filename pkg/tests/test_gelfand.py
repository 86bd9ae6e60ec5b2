"""The unital algebra, its norm, the transform, and eigendecomposition."""

from fractions import Fraction

import pytest
from hypothesis import given

import strategies as strat
from oracles import rational_gram_schmidt, rational_projector_sum
from ultraspec import (CANONICAL, MatrixOperator, NStarFunction,
                       OrthonormalFamily, Scalar, SpectralOperator, Vector,
                       adjoint, alg_combine, apply_spectral, certify_class,
                       eigendecompose, function_norm, gelfand_transform,
                       gram_schmidt, inverse_gelfand, op_norm, operator_norm,
                       power, spectral_norm, to_matrix)
from ultraspec.errors import (FamilyMismatch, FamilyTooSmall,
                              IrrationalSpectrum, NonSymmetric)

ONE = Scalar.one()
T = Scalar.t()


def op(alpha, lam_values):
    return SpectralOperator(alpha, Vector.of(lam_values), CANONICAL)


def test_unit_law():
    h = op(Scalar.rational(3), [T])
    assert alg_combine("mul", SpectralOperator.unit(), h) == h


def test_disjoint_projections_multiply_to_zero():
    p1 = SpectralOperator.projection(1)
    p2 = SpectralOperator.projection(2)
    assert p1 * p2 == SpectralOperator.zero()


def test_projection_idempotent():
    p1 = SpectralOperator.projection(1)
    assert p1 * p1 == p1


def test_family_mismatch():
    fam = gram_schmidt([Vector.of_rationals([1, 1])])
    with pytest.raises(FamilyMismatch):
        SpectralOperator.unit(fam) * SpectralOperator.unit()


def test_op_norm_examples():
    assert op_norm(op(ONE, [T])).val == 0
    assert op_norm(op(Scalar.zero(), [T, Scalar.t(2)])).val == 1
    assert op_norm(op(Scalar.t(2), [T])).val == 1


@given(strat.operators())
def test_norm_against_matrix(h):
    n = max(h.lam.max_index, 1) + 2
    assert op_norm(h) == operator_norm(to_matrix(h, n)) == spectral_norm(h)


def test_isometry_hard_case():
    # |alpha| equals the norm of the diagonal part, both nonzero
    h = op(ONE + T, [Scalar.rational(-1), Scalar.t(3)])
    assert op_norm(h).val == 0
    assert operator_norm(to_matrix(h, 4)).val == 0
    assert spectral_norm(h).val == 0


def test_power_of_unit():
    u = SpectralOperator.unit()
    assert power(u, 5) == u


def test_power_squares_diagonal():
    h = op(Scalar.zero(), [T])
    assert power(h, 2) == op(Scalar.zero(), [Scalar.t(2)])
    assert op_norm(power(h, 2)).val == 2 * op_norm(h).val


def test_power_of_complement_projection():
    h = op(ONE, [Scalar.rational(-1)])
    assert power(h, 2) == h


@given(strat.operators())
def test_power_multiplicativity(h):
    base = op_norm(h)
    for n in range(2, 6):
        assert op_norm(power(h, n)) == base.scaled(n)


def test_to_matrix_projection_canonical():
    m = to_matrix(SpectralOperator.projection(1), 2)
    assert m.entry(1, 1) == ONE
    assert m.entry(1, 2).is_zero and m.entry(2, 2).is_zero


def test_to_matrix_identity():
    assert to_matrix(SpectralOperator.unit(), 3) == MatrixOperator.identity(3)


def test_to_matrix_rank_one_family():
    fam = OrthonormalFamily((Vector.of_rationals([1, 1]),))
    h = SpectralOperator(Scalar.zero(), Vector.of([T]), fam)
    m = to_matrix(h, 2)
    half_t = Scalar.from_map({1: Fraction(1, 2)})
    assert all(m.entry(i, j) == half_t for i in (1, 2) for j in (1, 2))


def test_to_matrix_window_too_small():
    from ultraspec.errors import DimensionTooSmall
    with pytest.raises(DimensionTooSmall):
        to_matrix(op(Scalar.zero(), [T, T, T]), 2)


def test_transform_of_identity_is_constant_one():
    f = gelfand_transform(SpectralOperator.unit())
    assert f == NStarFunction.constant(ONE)


def test_transform_of_projection_is_indicator():
    f = gelfand_transform(SpectralOperator.projection(1))
    assert f == NStarFunction.indicator_of_points([1])


def test_transform_componentwise():
    f = gelfand_transform(op(ONE, [T]))
    assert f.value_at(1) == ONE + T
    assert f.value_at(2) == ONE
    assert f.value_at(float("inf")) == ONE


@given(strat.operators(), strat.operators())
def test_transform_is_algebra_homomorphism(h1, h2):
    assert (gelfand_transform(h1 * h2)
            == gelfand_transform(h1) * gelfand_transform(h2))
    assert (gelfand_transform(h1 + h2)
            == gelfand_transform(h1) + gelfand_transform(h2))


@given(strat.operators())
def test_transform_isometric_and_invertible(h):
    f = gelfand_transform(h)
    assert function_norm(f) == op_norm(h)
    assert inverse_gelfand(f, h.family) == h


@given(strat.functions())
def test_inverse_gelfand_roundtrip(f):
    assert gelfand_transform(inverse_gelfand(f, CANONICAL)) == f


def test_inverse_gelfand_constant():
    assert (inverse_gelfand(NStarFunction.constant(ONE), CANONICAL)
            == SpectralOperator.unit())


def test_inverse_gelfand_indicators():
    eta1 = NStarFunction.indicator_of_points([1])
    assert inverse_gelfand(eta1, CANONICAL) == SpectralOperator.projection(1)
    eta_co = NStarFunction.indicator_cofinite([1])
    assert (inverse_gelfand(eta_co, CANONICAL)
            == SpectralOperator.unit() - SpectralOperator.projection(1))


def test_inverse_gelfand_family_too_small():
    fam = gram_schmidt([Vector.of_rationals([1, 1])])
    f = NStarFunction.indicator_of_points([2])
    with pytest.raises(FamilyTooSmall):
        inverse_gelfand(f, fam)


def test_spectral_norm_enumerations():
    assert spectral_norm(SpectralOperator.projection(1)).val == 0
    assert spectral_norm(op(T, [])).val == 1
    assert spectral_norm(op(ONE, [Scalar.rational(-1)])).val == 0


def test_apply_spectral_matches_matrix():
    fam = gram_schmidt([Vector.of_rationals([1, 1, 0]),
                        Vector.of_rationals([0, 1, 1])])
    h = SpectralOperator(T, Vector.of([ONE, Scalar.t(2)]), fam)
    m = to_matrix(h, 4)
    for i in range(1, 5):
        from ultraspec import apply
        assert apply_spectral(h, Vector.basis(i)) == apply(m, Vector.basis(i))


def test_eigendecompose_swap_matrix():
    z, o = Scalar.zero(), ONE
    m = MatrixOperator.from_rows([[z, o], [o, z]])
    h = eigendecompose(m)
    values = sorted(v.coeff(0) for v in h.lam.values())
    assert values == [Fraction(-1), Fraction(1)]
    assert to_matrix(h, 2) == m
    assert operator_norm(m) == op_norm(h)


def test_eigendecompose_diagonal_series_entries():
    m = MatrixOperator.diagonal([T, Scalar.t(2)])
    h = eigendecompose(m)
    assert h.lam == Vector.of([T, Scalar.t(2)])
    assert h.family.canonical
    assert to_matrix(h, 2) == m


def test_eigendecompose_rejects_nonsymmetric():
    m = MatrixOperator.from_rows([[Scalar.zero(), ONE],
                                  [Scalar.zero(), Scalar.zero()]])
    with pytest.raises(NonSymmetric):
        eigendecompose(m)


def test_eigendecompose_rejects_irrational_spectrum():
    m = MatrixOperator.from_rows([[ONE, ONE], [ONE, Scalar.rational(2)]])
    with pytest.raises(IrrationalSpectrum):
        eigendecompose(m)


def test_eigendecompose_repeated_eigenvalue():
    # projector onto span{(1,1)} doubled: eigenvalues 2 (once) and 0
    base = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    m = MatrixOperator.from_rows(
        [[Scalar.rational(c) for c in row] for row in base])
    h = eigendecompose(m)
    assert [v.coeff(0) for v in h.lam.values()] == [Fraction(2)]
    assert to_matrix(h, 2) == m


def test_eigendecompose_roundtrip_via_rational_oracle():
    diag = [Fraction(2), Fraction(-1), Fraction(2)]
    raw = [[Fraction(1), Fraction(1), Fraction(0)],
           [Fraction(0), Fraction(1), Fraction(1)],
           [Fraction(1), Fraction(0), Fraction(1)]]
    basis = rational_gram_schmidt(raw)
    entries = rational_projector_sum(diag, basis)
    m = MatrixOperator.from_rows(
        [[Scalar.rational(c) for c in row] for row in entries])
    assert adjoint(m) == m
    h = eigendecompose(m)
    assert to_matrix(h, 3) == m
    assert certify_class(m, "compact").passed
    assert sorted(v.coeff(0) for v in h.lam.values()) == sorted(diag)
