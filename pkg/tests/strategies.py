"""Hypothesis strategies for domain objects, kept small for speed."""

from fractions import Fraction

import hypothesis.strategies as st

from ultraspec import (CANONICAL, Clopen, NStarFunction, Scalar,
                       SpectralOperator, Vector)

rationals = st.fractions(min_value=Fraction(-8), max_value=Fraction(8),
                         max_denominator=4)
nonzero_rationals = rationals.filter(bool)


def scalars(min_exp=-3, max_exp=6, max_terms=3):
    return st.dictionaries(st.integers(min_exp, max_exp), nonzero_rationals,
                           max_size=max_terms).map(Scalar.from_map)


def nonzero_scalars(min_exp=-3, max_exp=6, max_terms=3):
    return st.dictionaries(st.integers(min_exp, max_exp), nonzero_rationals,
                           min_size=1, max_size=max_terms
                           ).map(Scalar.from_map)


def vectors(max_index=6, max_entries=4, min_exp=-3):
    return st.dictionaries(
        st.integers(1, max_index), nonzero_scalars(min_exp=min_exp),
        max_size=max_entries).map(lambda d: Vector(tuple(d.items())))


def nonzero_vectors(max_index=6, max_entries=4, min_exp=-3):
    return st.dictionaries(
        st.integers(1, max_index), nonzero_scalars(min_exp=min_exp),
        min_size=1, max_size=max_entries
    ).map(lambda d: Vector(tuple(d.items())))


def rational_vectors(size=4):
    return st.lists(rationals, min_size=1, max_size=size).map(
        Vector.of_rationals)


def operators():
    return st.builds(SpectralOperator, scalars(), vectors(),
                     st.just(CANONICAL))


def functions():
    return st.builds(NStarFunction, scalars(), vectors())


def clopens(max_point=6):
    return st.builds(
        Clopen, st.booleans(),
        st.frozensets(st.integers(1, max_point), max_size=4).map(tuple))
