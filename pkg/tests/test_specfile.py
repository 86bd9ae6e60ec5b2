"""Serialization: parse and serialize are inverse on canonical forms."""

import pytest
from hypothesis import given

import strategies as strat
from ultraspec import specfile
from ultraspec.errors import ParseError, ValidationError


@given(strat.scalars())
def test_scalar_roundtrip(x):
    assert specfile.read_scalar(specfile.write_scalar(x)) == x


@given(strat.vectors())
def test_vector_roundtrip(v):
    assert specfile.read_vector(specfile.write_vector(v)) == v


@given(strat.operators())
def test_operator_roundtrip(h):
    assert specfile.read_operator(specfile.write_operator(h)) == h


@given(strat.functions())
def test_function_roundtrip(f):
    assert specfile.read_function(specfile.write_function(f)) == f


@given(strat.clopens())
def test_clopen_roundtrip(c):
    assert specfile.read_clopen(specfile.write_clopen(c)) == c


def test_clopen_literals():
    assert specfile.read_clopen({"finite": [1, 3]}).base == (1, 3)
    got = specfile.read_clopen({"cofinite": [2]})
    assert got.cofinite and got.base == (2,)


def test_family_roundtrip_explicit():
    from ultraspec import Vector, gram_schmidt
    fam = gram_schmidt([Vector.of_rationals([1, 1]),
                        Vector.of_rationals([1, -1, 2])])
    assert specfile.read_family(specfile.write_family(fam)) == fam


def test_family_canonical_keyword():
    from ultraspec import CANONICAL
    assert specfile.read_family("canonical") == CANONICAL
    assert specfile.read_family(None) == CANONICAL
    assert specfile.write_family(CANONICAL) == "canonical"


def test_family_rejects_non_orthonormal():
    with pytest.raises(ValidationError):
        specfile.read_family([["1"], ["1", "1"]])


def test_partition_roundtrip():
    data = [{"piece": {"finite": [1]}, "tag": 1},
            {"piece": {"cofinite": [1]}, "tag": "inf"}]
    part = specfile.read_partition(data)
    assert specfile.write_partition(part) == data


def test_table_roundtrip():
    data = {"at_zero": "0",
            "values": [{"eigenvalue": "t", "value": "1"},
                       {"eigenvalue": "t^2", "value": "0"}]}
    table = specfile.read_table(data)
    assert specfile.write_table(table) == data


def test_sigma_clopen_roundtrip():
    data = {"without": ["5*t"]}
    c = specfile.read_sigma_clopen(data)
    assert c.complemented
    assert specfile.write_sigma_clopen(c) == data


def test_read_errors_carry_paths():
    with pytest.raises(ParseError) as err:
        specfile.read_operator({"alpha": "t^", "lambda": []})
    assert "alpha" in str(err.value)
    with pytest.raises(ParseError):
        specfile.read_vector("not-a-list")
    with pytest.raises(ParseError):
        specfile.read_clopen({"finite": [0]})
    with pytest.raises(ParseError):
        specfile.read_matrix([["1", "0"]])
