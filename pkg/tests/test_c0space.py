"""Sequence space: inner product, sup norm, orthogonalization, projections."""

import pytest
from hypothesis import given

import strategies as strat
from ultraspec import (Scalar, Vector, gram_schmidt, inner_product, project,
                       sup_norm)
from ultraspec.errors import DependentInput, ZeroDirection

ONE = Scalar.one()
T = Scalar.t()


def test_inner_product_designed_cancellation():
    x = Vector.of_rationals([1, 1])
    y = Vector.of_rationals([1, -1])
    assert inner_product(x, y).is_zero


def test_inner_product_direct_sum():
    x = Vector.of([ONE, T])
    assert inner_product(x, x) == ONE + T * T


def test_inner_product_with_zero_vector():
    assert inner_product(Vector.zero(), Vector.of([ONE, T])).is_zero


def test_sup_norm_examples():
    assert sup_norm(Vector.of([ONE, T])).val == 0
    assert sup_norm(Vector.of([Scalar.t(2), Scalar.from_map({3: 3})])).val == 2
    assert sup_norm(Vector.zero()).is_zero


@given(strat.nonzero_vectors())
def test_norm_identity(x):
    assert inner_product(x, x).valuation() == 2 * sup_norm(x).val


@given(strat.vectors(), strat.vectors())
def test_inner_product_bound(x, y):
    p = inner_product(x, y)
    if not p.is_zero:
        assert p.valuation() >= sup_norm(x).val + sup_norm(y).val


@given(strat.vectors(), strat.vectors(), strat.scalars())
def test_inner_product_bilinear(x, y, c):
    z = x.scale(c)
    assert inner_product(z, y) == c * inner_product(x, y)
    assert inner_product(x + z, y) == inner_product(x, y) + inner_product(z, y)
    assert inner_product(x, y) == inner_product(y, x)


def test_gram_schmidt_single_vector():
    fam = gram_schmidt([Vector.of_rationals([1, 1, 0])])
    assert fam.members == (Vector.of_rationals([1, 1]),)
    assert inner_product(fam.member(1), fam.member(1)) == Scalar.rational(2)


def test_gram_schmidt_classical_example():
    fam = gram_schmidt([Vector.of_rationals([1, 1, 0]),
                        Vector.of_rationals([0, 1, 1])])
    y1, y2 = fam.members
    assert y2 == Vector.of_rationals(["-1/2", "1/2", 1])
    assert inner_product(y1, y2).is_zero
    assert inner_product(y2, y2).valuation() == 0


def test_gram_schmidt_rejects_dependent():
    with pytest.raises(DependentInput):
        gram_schmidt([Vector.of_rationals([1, 0]),
                      Vector.of_rationals([2, 0])])


def test_gram_schmidt_rescales_to_unit_norm():
    fam = gram_schmidt([Vector.of([Scalar.t(2), Scalar.t(3)])])
    assert fam.gram(1).valuation() == 0
    assert sup_norm(fam.member(1)).val == 0


@given(strat.rational_vectors(), strat.rational_vectors())
def test_gram_schmidt_invariants_on_random_pairs(v1, v2):
    try:
        fam = gram_schmidt([v1, v2])
    except DependentInput:
        return
    assert inner_product(fam.member(1), fam.member(2)).is_zero
    for i in (1, 2):
        assert fam.gram(i).valuation() == 0


def test_project_classical_half():
    y = Vector.of_rationals([1, 1])
    x = Vector.of_rationals([1, 0])
    assert project(y, x) == Vector.of_rationals(["1/2", "1/2"])


def test_project_orthogonal_canonical():
    assert project(Vector.basis(1), Vector.basis(2)).is_zero


def test_project_fixes_its_range():
    y = Vector.of([ONE, T, Scalar.rational(3)])
    assert project(y, y) == y


def test_project_zero_direction():
    with pytest.raises(ZeroDirection):
        project(Vector.zero(), Vector.basis(1))


@given(strat.rational_vectors(), strat.vectors(), strat.vectors())
def test_project_idempotent_linear_normal(y, x, z):
    if y.is_zero:
        return
    px = project(y, x)
    assert project(y, px) == px
    assert project(y, x + z) == px + project(y, z)
    assert inner_product(x - px, project(y, z)).is_zero
