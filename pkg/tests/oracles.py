"""Brute-force oracles, independent of the code paths they check.

The dense inverse below does plain Gauss-Jordan elimination on scalar
entries with valuation pivoting; the rational helpers below it work on
bare Fractions with the classical textbook formulas.  None of them call
the library routines they are used to cross-check.
"""

from fractions import Fraction

from ultraspec import INFINITE, MatrixOperator, Scalar, divide


def _val(x: Scalar):
    return x.terms[0][0] if x.terms else INFINITE


def gauss_jordan_inverse(m: MatrixOperator,
                         precision: int) -> MatrixOperator:
    """Dense inverse over Q((t)); divisions truncated at the precision."""
    n = m.dim
    rows = [[m.entry(i, j) for j in range(1, n + 1)]
            + [Scalar.one() if i == k + 1 else Scalar.zero()
               for k in range(n)]
            for i in range(1, n + 1)]
    for col in range(n):
        pivot_row = min(range(col, n), key=lambda r: _val(rows[r][col]))
        if not rows[pivot_row][col].terms:
            raise ZeroDivisionError(f"singular at column {col + 1}")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        rows[col] = [divide(x, pivot, precision) for x in rows[col]]
        for r in range(n):
            if r == col:
                continue
            factor = rows[r][col]
            if factor.is_zero:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return MatrixOperator(tuple(tuple(row[n:]) for row in rows))


def rational_gram_schmidt(vectors: list[list[Fraction]]
                          ) -> list[list[Fraction]]:
    """Classical Gram-Schmidt over Q with the bilinear form sum x_i y_i."""
    basis: list[list[Fraction]] = []
    for v in vectors:
        u = list(v)
        for b in basis:
            bb = sum(x * x for x in b)
            ub = sum(x * y for x, y in zip(u, b))
            coeff = ub / bb
            u = [x - coeff * y for x, y in zip(u, b)]
        if any(u):
            basis.append(u)
    return basis


def rational_projector_sum(diag: list[Fraction],
                           basis: list[list[Fraction]]
                           ) -> list[list[Fraction]]:
    """sum d_k (u_k u_k^T)/<u_k,u_k> as a plain Fraction matrix."""
    n = len(basis[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for d, u in zip(diag, basis):
        uu = sum(x * x for x in u)
        for i in range(n):
            for j in range(n):
                out[i][j] += d * u[i] * u[j] / uu
    return out
