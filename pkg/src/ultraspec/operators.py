"""Bounded operators on truncated c0 as exact matrices.

A matrix of size N stands for an operator whose entries beyond the
window are exactly zero (the declared zero tail).  Column j holds the
coordinates of T(e_j), so the operator norm is the sup over columns of
the column sup norm, which equals the sup over all entries; both
readings are computed and must agree.

Class certificates are finite-truncation checks, not proofs about an
infinite operator: under the zero-tail rule the adjointable / vanishing
/ compact conditions always hold, and the certificate's value is the
recorded decay profile, which parameterized families can compare across
growing truncations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .c0space import Vector, inner_product
from .errors import DimensionMismatch, ImpreciseZero, UnknownTail
from .kfield import INFINITE, NormValue, Scalar, Valuation, min_valuation

#: Certificate kinds: adjointable, adjointable-with-vanishing-columns,
#: compact, and symmetric.
CLASS_KINDS = ("A0", "A1", "compact", "self_adjoint")


@dataclass(frozen=True)
class MatrixOperator:
    """An N x N matrix of scalars; entry(i, j) is row i, column j, 1-based."""

    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        rows = tuple(tuple(row) for row in self.rows)
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "rows", rows)

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "MatrixOperator":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "MatrixOperator":
        one, zero = Scalar.one(), Scalar.zero()
        return cls(tuple(tuple(one if i == j else zero for j in range(n))
                         for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "MatrixOperator":
        z = Scalar.zero()
        return cls(tuple((z,) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "MatrixOperator":
        n = len(values)
        zero = Scalar.zero()
        return cls(tuple(tuple(values[i] if i == j else zero
                               for j in range(n)) for i in range(n)))

    # -- structure ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> Vector:
        return Vector(tuple((i + 1, self.rows[i][j - 1])
                            for i in range(self.dim)))

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "MatrixOperator") -> "MatrixOperator":
        if not isinstance(other, MatrixOperator):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} != {other.dim}")
        return MatrixOperator(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: "MatrixOperator") -> "MatrixOperator":
        if not isinstance(other, MatrixOperator):
            return NotImplemented
        return self + other.scale(Scalar.rational(-1))

    def scale(self, c: Scalar) -> "MatrixOperator":
        return MatrixOperator(tuple(tuple(c * a for a in row)
                                    for row in self.rows))

    def congruent(self, other: "MatrixOperator", modulus: int) -> bool:
        if other.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} != {other.dim}")
        return all(a.congruent(b, modulus)
                   for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))


def apply(T: MatrixOperator, x: Vector) -> Vector:
    """Exact matrix-vector product; x must live inside the window."""
    if x.max_index > T.dim:
        raise DimensionMismatch(
            f"vector support {x.max_index} exceeds dimension {T.dim}")
    n = T.dim
    out = []
    for i in range(1, n + 1):
        acc = Scalar.zero()
        for j, xj in x.entries:
            acc = acc + T.entry(i, j) * xj
        out.append((i, acc))
    return Vector(tuple(out))


def adjoint(T: MatrixOperator) -> MatrixOperator:
    """The transpose: <Tx, y> = <x, adjoint(T) y> for this bilinear form."""
    n = T.dim
    return MatrixOperator(tuple(tuple(T.rows[j][i] for j in range(n))
                                for i in range(n)))


def compose(S: MatrixOperator, T: MatrixOperator) -> MatrixOperator:
    """Exact matrix product S o T."""
    if S.dim != T.dim:
        raise DimensionMismatch(f"{S.dim} != {T.dim}")
    n = S.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Scalar.zero()
            for k in range(n):
                acc = acc + S.rows[i][k] * T.rows[k][j]
            row.append(acc)
        out.append(tuple(row))
    return MatrixOperator(tuple(out))


def operator_norm(T: MatrixOperator) -> NormValue:
    """sup over entries of |entry|, read as the minimum entry valuation.

    Agrees with the sup over columns of the column sup norm; both are
    checked against each other in the test suite.
    """
    try:
        return NormValue(min_valuation(a for row in T.rows for a in row))
    except ImpreciseZero as exc:
        raise UnknownTail(str(exc)) from exc


def hs_inner(S: MatrixOperator, T: MatrixOperator) -> Scalar:
    """The trace-form pairing sum_n <S(e_n), T(e_n)>, columnwise and exact.

    Meaningful for operators with decaying columns; on the zero-tail
    window it is always a finite sum.
    """
    if S.dim != T.dim:
        raise DimensionMismatch(f"{S.dim} != {T.dim}")
    acc = Scalar.zero()
    for n in range(1, S.dim + 1):
        acc = acc + inner_product(S.column(n), T.column(n))
    return acc


@dataclass(frozen=True)
class ClassCertificate:
    """Outcome of a finite-truncation class check.

    ``witness`` records the decaying quantity per index (column sup-norm
    valuations for A1/compact, row tail valuations for A0), with the
    infinite valuation for exactly-zero slices.  ``monotone_decay``
    reports whether the recorded window already exhibits decay: weakly
    increasing valuations that end strictly above where they start (or
    an all-zero slice).  A single finite matrix always passes under the
    zero-tail rule; families should compare witnesses across dims.
    """

    kind: str
    dim: int
    witness: tuple[Valuation, ...]
    monotone_decay: bool
    passed: bool = True


def _profile_decays(profile: Sequence[Valuation]) -> bool:
    if all(v == INFINITE for v in profile):
        return True
    increasing = all(a <= b for a, b in zip(profile, profile[1:]))
    return increasing and profile[-1] > profile[0]


def _column_profile(T: MatrixOperator) -> tuple[Valuation, ...]:
    out = []
    for j in range(1, T.dim + 1):
        try:
            out.append(min_valuation(T.column(j).values()))
        except ImpreciseZero as exc:
            raise UnknownTail(f"column {j}: {exc}") from exc
    return tuple(out)


def _row_tail_profile(T: MatrixOperator) -> tuple[Valuation, ...]:
    # A0 asks <T e_i, e_j> -> 0 in i for each j: decay along each row.
    # The witness aggregates, per position i, the worst row entry.
    out = []
    for i in range(1, T.dim + 1):
        try:
            out.append(min_valuation(T.entry(j, i)
                                     for j in range(1, T.dim + 1)))
        except ImpreciseZero as exc:
            raise UnknownTail(f"position {i}: {exc}") from exc
    return tuple(out)


def certify_class(T: MatrixOperator, kind: str) -> ClassCertificate:
    """Certify membership in A0, A1, compact, or self_adjoint at dim N.

    Under the zero-tail rule the first three always pass for a finite
    matrix; the certificate's content is the decay witness.  The
    self_adjoint check compares T with its transpose and can fail.
    """
    if kind not in CLASS_KINDS:
        raise ValueError(f"unknown class {kind!r}")
    if kind == "self_adjoint":
        sym = adjoint(T)
        ok = sym == T
        return ClassCertificate(kind, T.dim, (), monotone_decay=ok,
                                passed=ok)
    if kind == "A0":
        profile = _row_tail_profile(T)
    else:
        profile = _column_profile(T)
    return ClassCertificate(kind, T.dim, profile,
                            monotone_decay=_profile_decays(profile))


def summing_functional_matrix(n: int) -> MatrixOperator:
    """Truncation of x -> (sum_i x_i) e_1, the stock non-adjointable map.

    Its transpose exists at every truncation, yet the A0 decay witness
    along the first row is constantly 1 in norm -- exactly how the
    adjoint fails to exist for the infinite operator.
    """
    one, zero = Scalar.one(), Scalar.zero()
    return MatrixOperator(tuple(
        tuple(one if i == 0 else zero for _ in range(n))
        for i in range(n)))
