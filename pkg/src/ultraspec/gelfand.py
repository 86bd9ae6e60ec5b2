"""The commutative unital algebra of operators alpha*Id + sum lambda_i P_i.

Attached to a fixed orthonormal family Y, these operators form a
commutative Banach algebra with unit whose norm max(|alpha|, sup|lambda_i|)
is power multiplicative.  Its character space is N* = N with a point at
infinity: the character at n evaluates to alpha + lambda_n and the
character at infinity to alpha.  The Gelfand transform repackages an
operator as the continuous function n -> alpha + lambda_n on N*, and is
an isometric algebra isomorphism onto C(N*).

Matrices enter twice: to_matrix materializes an operator on a finite
window (the bridge to the operator-norm reading of everything), and
eigendecompose inverts it for symmetric rational matrices with rational
spectrum, the constructive face of the compact self-adjoint
representation T = sum lambda_i P_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .c0space import (CANONICAL, OrthonormalFamily, Vector, gram_schmidt,
                      inner_product)
from .errors import (DegenerateGram, DimensionTooSmall, FamilyMismatch,
                     FamilyTooSmall, IrrationalSpectrum, NonSymmetric)
from .kfield import DEFAULT_PRECISION, NormValue, Scalar, min_valuation
from .operators import MatrixOperator, adjoint


@dataclass(frozen=True)
class SpectralOperator:
    """alpha*Id + sum over support(lam) of lam_i P_i, P_i projecting on y_i."""

    alpha: Scalar
    lam: Vector
    family: OrthonormalFamily = CANONICAL

    def __post_init__(self):
        if not self.family.covers(self.lam.max_index):
            raise FamilyTooSmall(
                f"lambda support reaches {self.lam.max_index}, family has "
                f"{self.family.size} members")

    # -- constructors ---------------------------------------------------

    @classmethod
    def unit(cls, family: OrthonormalFamily = CANONICAL) -> "SpectralOperator":
        return cls(Scalar.one(), Vector.zero(), family)

    @classmethod
    def zero(cls, family: OrthonormalFamily = CANONICAL) -> "SpectralOperator":
        return cls(Scalar.zero(), Vector.zero(), family)

    @classmethod
    def diagonal(cls, lam: Vector,
                 family: OrthonormalFamily = CANONICAL) -> "SpectralOperator":
        """The compact self-adjoint part alone: alpha = 0."""
        return cls(Scalar.zero(), lam, family)

    @classmethod
    def projection(cls, index: int,
                   family: OrthonormalFamily = CANONICAL) -> "SpectralOperator":
        return cls(Scalar.zero(), Vector.basis(index), family)

    # -- algebra ----------------------------------------------------------

    def _check_family(self, other: "SpectralOperator"):
        if self.family != other.family:
            raise FamilyMismatch("operands attached to different families")

    def __add__(self, other: "SpectralOperator") -> "SpectralOperator":
        if not isinstance(other, SpectralOperator):
            return NotImplemented
        self._check_family(other)
        return SpectralOperator(self.alpha + other.alpha,
                                self.lam + other.lam, self.family)

    def __sub__(self, other: "SpectralOperator") -> "SpectralOperator":
        if not isinstance(other, SpectralOperator):
            return NotImplemented
        self._check_family(other)
        return SpectralOperator(self.alpha - other.alpha,
                                self.lam - other.lam, self.family)

    def __mul__(self, other: "SpectralOperator") -> "SpectralOperator":
        """(a, mu)(b, nu) = (ab, a*nu + b*mu + mu.nu), the unitization rule."""
        if not isinstance(other, SpectralOperator):
            return NotImplemented
        self._check_family(other)
        mixed = (other.lam.scale(self.alpha) + self.lam.scale(other.alpha)
                 + self.lam.pointwise(other.lam))
        return SpectralOperator(self.alpha * other.alpha, mixed, self.family)

    def scale(self, c: Scalar) -> "SpectralOperator":
        return SpectralOperator(c * self.alpha, self.lam.scale(c),
                                self.family)

    def __pow__(self, n: int) -> "SpectralOperator":
        return power(self, n)

    def congruent(self, other: "SpectralOperator", modulus: int) -> bool:
        self._check_family(other)
        return (self.alpha.congruent(other.alpha, modulus)
                and self.lam.congruent(other.lam, modulus))

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, lambda={self.lam})"


@dataclass(frozen=True)
class NStarFunction:
    """A continuous K-valued function on N* = N + {infinity}.

    Stored as the value at infinity plus the finitely supported
    deviation d_n = f(n) - f(infinity); continuity is automatic.  The
    sup norm is max(|at_infinity|, sup|d_n|): each |f(n)| is bounded by
    that maximum and the bound is attained at infinity or on support.
    """

    at_infinity: Scalar
    deviations: Vector

    def value_at(self, point) -> Scalar:
        """f at a point of N*; the infinite valuation stands for infinity."""
        if point == float("inf"):
            return self.at_infinity
        return self.at_infinity + self.deviations.get(point)

    def __add__(self, other: "NStarFunction") -> "NStarFunction":
        if not isinstance(other, NStarFunction):
            return NotImplemented
        return NStarFunction(self.at_infinity + other.at_infinity,
                             self.deviations + other.deviations)

    def __sub__(self, other: "NStarFunction") -> "NStarFunction":
        if not isinstance(other, NStarFunction):
            return NotImplemented
        return NStarFunction(self.at_infinity - other.at_infinity,
                             self.deviations - other.deviations)

    def __mul__(self, other: "NStarFunction") -> "NStarFunction":
        if not isinstance(other, NStarFunction):
            return NotImplemented
        dev = (other.deviations.scale(self.at_infinity)
               + self.deviations.scale(other.at_infinity)
               + self.deviations.pointwise(other.deviations))
        return NStarFunction(self.at_infinity * other.at_infinity, dev)

    def scale(self, c: Scalar) -> "NStarFunction":
        return NStarFunction(c * self.at_infinity, self.deviations.scale(c))

    @classmethod
    def constant(cls, c: Scalar) -> "NStarFunction":
        return cls(c, Vector.zero())

    @classmethod
    def indicator_of_points(cls, points: Sequence[int]) -> "NStarFunction":
        """The characteristic function of a finite subset of N."""
        one = Scalar.one()
        return cls(Scalar.zero(), Vector(tuple((p, one) for p in points)))

    @classmethod
    def indicator_cofinite(cls, removed: Sequence[int]) -> "NStarFunction":
        """The characteristic function of N* minus finitely many points."""
        minus_one = Scalar.rational(-1)
        return cls(Scalar.one(),
                   Vector(tuple((p, minus_one) for p in removed)))

    def __str__(self) -> str:
        return (f"(at_infinity={self.at_infinity}, "
                f"deviations={self.deviations})")


def function_norm(f: NStarFunction) -> NormValue:
    """Sup norm over N*, read as a valuation."""
    values = [f.at_infinity] + list(f.deviations.values())
    return NormValue(min_valuation(values))


def alg_combine(op: str, a: SpectralOperator,
                b: SpectralOperator) -> SpectralOperator:
    """Named dispatch over the algebra operations: 'add' or 'mul'."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def op_norm(h: SpectralOperator) -> NormValue:
    """max(|alpha|, sup|lambda_i|) as the minimum of the valuations."""
    return NormValue(min_valuation([h.alpha, *h.lam.values()]))


def power(h: SpectralOperator, n: int) -> SpectralOperator:
    """n-th power, n >= 1; the norm valuation scales by n exactly."""
    if n < 1:
        raise ValueError("powers start at n = 1")
    out = h
    for _ in range(n - 1):
        out = out * h
    return out


def spectral_norm(h: SpectralOperator) -> NormValue:
    """Sup over all characters of |character(h)|.

    The characters are indexed by N*: at n the value is alpha + lambda_n,
    at infinity it is alpha (every projection is sent to 0 there).
    Points outside the support repeat the value alpha, so the finite
    enumeration below is exhaustive.
    """
    values = [h.alpha]
    values.extend(h.alpha + x for x in h.lam.values())
    return NormValue(min_valuation(values))


def gelfand_transform(h: SpectralOperator) -> NStarFunction:
    """h -> (n -> alpha + lambda_n, infinity -> alpha); isometric."""
    return NStarFunction(h.alpha, h.lam)


def inverse_gelfand(f: NStarFunction,
                    family: OrthonormalFamily = CANONICAL) -> SpectralOperator:
    """The inverse transform: read alpha and lambda straight off f."""
    if not family.covers(f.deviations.max_index):
        raise FamilyTooSmall(
            f"deviation support reaches {f.deviations.max_index}, family "
            f"has {family.size} members")
    return SpectralOperator(f.at_infinity, f.deviations, family)


def to_matrix(h: SpectralOperator, n: int,
              precision: int = DEFAULT_PRECISION) -> MatrixOperator:
    """Materialize on the window 1..n: alpha on the diagonal plus
    lam_k * y_i y_j / <y_k,y_k> summed over the support of lam.

    Exact whenever every <y_k,y_k> is a rational monomial; otherwise the
    projection coefficients are truncated series at the given precision.
    """
    needed = max(h.lam.max_index, h.family.max_support())
    if needed > n:
        raise DimensionTooSmall(
            f"window {n} cannot hold support up to {needed}")
    entries = [[Scalar.zero()] * n for _ in range(n)]
    if not h.alpha.is_zero:
        for i in range(n):
            entries[i][i] = h.alpha
    for k, lam_k in h.lam.entries:
        y = h.family.member(k)
        coeff = lam_k * h.family.gram_inverse(k, precision)
        for i, yi in y.entries:
            for j, yj in y.entries:
                entries[i - 1][j - 1] = entries[i - 1][j - 1] + coeff * (yi * yj)
    return MatrixOperator(tuple(tuple(row) for row in entries))


def apply_spectral(h: SpectralOperator, x: Vector,
                   precision: int = DEFAULT_PRECISION) -> Vector:
    """h(x) = alpha*x + sum lam_k (<x,y_k>/<y_k,y_k>) y_k, directly."""
    out = x.scale(h.alpha)
    for k, lam_k in h.lam.entries:
        y = h.family.member(k)
        c = (lam_k * inner_product(x, y)) * h.family.gram_inverse(k,
                                                                  precision)
        out = out + y.scale(c)
    return out


# -- exact eigendecomposition over the rationals ------------------------------

def _rational_entries(T: MatrixOperator) -> list[list[Fraction]]:
    out = []
    for row in T.rows:
        vals = []
        for x in row:
            if not x.is_exact or any(e != 0 for e, _ in x.terms):
                raise IrrationalSpectrum(
                    "eigendecomposition handles constant rational entries "
                    "only")
            vals.append(x.coeff(0))
        out.append(vals)
    return out


def _char_poly(a: list[list[Fraction]]) -> list[Fraction]:
    """Monic characteristic polynomial of det(xI - A), ascending coeffs.

    Faddeev-LeVerrier recurrence on B_k = A M_k; everything stays
    rational.
    """
    n = len(a)
    coeffs = [Fraction(0)] * n + [Fraction(1)]
    b = [row[:] for row in a]
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                b[i][i] += coeffs[n - k + 1]
            b = [[sum(a[i][l] * b[l][j] for l in range(n))
                  for j in range(n)] for i in range(n)]
        trace = sum(b[i][i] for i in range(n))
        coeffs[n - k] = Fraction(-trace, k)
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(poly: list[Fraction]) -> dict[Fraction, int]:
    """All rational roots with multiplicity; error if the monic rational
    polynomial does not split completely over Q."""
    coeffs = poly[:]
    roots: dict[Fraction, int] = {}
    while len(coeffs) > 1:
        # strip zero roots
        if coeffs[0] == 0:
            roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
            coeffs = coeffs[1:]
            continue
        denom_lcm = 1
        for c in coeffs:
            denom_lcm = denom_lcm * c.denominator // _gcd(
                denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in coeffs]
        root = None
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _poly_eval(coeffs, cand) == 0:
                        root = cand
                        break
                if root is not None:
                    break
            if root is not None:
                break
        if root is None:
            raise IrrationalSpectrum(
                "characteristic polynomial has no full rational splitting")
        roots[root] = roots.get(root, 0) + 1
        coeffs = _deflate(coeffs, root)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _poly_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Divide by (x - root); exact synthetic division, remainder zero."""
    d = len(coeffs) - 1
    out = [Fraction(0)] * d
    out[d - 1] = coeffs[d]
    for i in range(d - 1, 0, -1):
        out[i - 1] = coeffs[i] + root * out[i]
    assert coeffs[0] + root * out[0] == 0, "deflation by a non-root"
    return out


def _kernel_basis(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the null space over Q by row reduction."""
    n = len(a)
    m = [row[:] for row in a]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        scale = m[r][c]
        m[r] = [x / scale for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -m[row_idx][fc]
        basis.append(vec)
    return basis


def eigendecompose(T: MatrixOperator) -> SpectralOperator:
    """Split a symmetric rational matrix as sum lambda_k P_k exactly.

    Restricted to constant rational entries with a fully rational
    spectrum: the characteristic polynomial is factored by rational
    root search, each eigenspace kernel is computed exactly, and each
    is orthogonalized.  Eigenvalues are emitted in ascending order;
    the zero eigenspace contributes nothing to the sum.
    """
    if adjoint(T) != T:
        raise NonSymmetric("eigendecomposition needs a symmetric matrix")
    n = T.dim
    if all(T.entry(i, j).is_zero
           for i in range(1, n + 1) for j in range(1, n + 1) if i != j):
        # already diagonal: read the eigenvalues off, whatever they are
        lam = Vector(tuple((i, T.entry(i, i)) for i in range(1, n + 1)))
        return SpectralOperator(Scalar.zero(), lam, CANONICAL)
    a = _rational_entries(T)
    roots = _rational_roots(_char_poly(a))
    vectors: list[Vector] = []
    lam_values: list[Scalar] = []
    for mu in sorted(roots):
        if mu == 0:
            continue
        shifted = [[a[i][j] - (mu if i == j else 0) for j in range(n)]
                   for i in range(n)]
        kern = _kernel_basis(shifted)
        if len(kern) != roots[mu]:
            raise IrrationalSpectrum(
                f"eigenvalue {mu} is defective: geometric multiplicity "
                f"{len(kern)} < {roots[mu]}")
        space = gram_schmidt([Vector.of_rationals(v) for v in kern])
        for y in space.members:
            if inner_product(y, y).is_zero:
                raise DegenerateGram("eigenvector with zero self-pairing")
            vectors.append(y)
            lam_values.append(Scalar.rational(mu))
    family = OrthonormalFamily(tuple(vectors))
    lam = Vector.of(lam_values)
    return SpectralOperator(Scalar.zero(), lam, family)
