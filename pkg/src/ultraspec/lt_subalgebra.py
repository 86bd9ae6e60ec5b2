"""The closed subalgebra generated by one diagonalizable operator.

Fix T = sum lambda_n P_n.  Its eigenvalues are the distinct values of
lambda together with 0 (the accumulation point of any infinite range);
indices with equal values form finite classes.  The algebra generated by
T and the identity is, through the Gelfand transform, the continuous
functions on that spectrum: an operator (alpha, mu) belongs to it
exactly when mu is constant on every class, and then it is the integral
of a value table on the spectrum against the induced spectral measure.

Idempotents of the algebra are sums of class projections or complements
of such sums; the resolvent of T at a point z off the spectrum is
(1/z)(Id + T_w) with w_i = lambda_i/(z - lambda_i), computed here to a
caller-chosen series precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .c0space import CANONICAL, OrthonormalFamily, Vector
from .errors import (MissingValue, NotIdempotent, SpectralPoint,
                     UnknownEigenvalue)
from .gelfand import SpectralOperator
from .kfield import DEFAULT_PRECISION, Scalar


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues of T_lambda, with 0, and the index classes."""

    nonzero: tuple[Scalar, ...]                 # deterministic order
    classes: tuple[tuple[Scalar, tuple[int, ...]], ...]

    @property
    def eigenvalues(self) -> tuple[Scalar, ...]:
        return self.nonzero + (Scalar.zero(),)

    def contains(self, z: Scalar) -> bool:
        return z.is_zero or z in self.nonzero

    def class_of(self, value: Scalar) -> tuple[int, ...]:
        for v, indices in self.classes:
            if v == value:
                return indices
        raise UnknownEigenvalue(f"{value} is not a nonzero eigenvalue")

    def __str__(self) -> str:
        parts = [f"{v} -> {{{','.join(map(str, idx))}}}"
                 for v, idx in self.classes]
        return "; ".join(parts) if parts else "only 0"


def spectrum_of(lam: Vector) -> Spectrum:
    """Group the support of lambda by exact value; 0 always belongs."""
    groups: dict[Scalar, list[int]] = {}
    for i, v in lam.entries:
        groups.setdefault(v, []).append(i)
    ordered = sorted(groups, key=lambda s: s.sort_key())
    return Spectrum(tuple(ordered),
                    tuple((v, tuple(groups[v])) for v in ordered))


def poly_eval(coeffs: Sequence[Scalar], lam: Vector,
              family: OrthonormalFamily = CANONICAL) -> SpectralOperator:
    """Evaluate a polynomial at T_lambda: coeffs[0]*Id + sum coeffs[m]*T^m.

    Powers act pointwise on lambda, so the deviation at n is
    sum_m coeffs[m] * lambda_n^m.
    """
    alpha = coeffs[0] if coeffs else Scalar.zero()
    dev_entries = []
    for n, v in lam.entries:
        acc = Scalar.zero()
        vpow = Scalar.one()
        for m in range(1, len(coeffs)):
            vpow = vpow * v
            acc = acc + coeffs[m] * vpow
        dev_entries.append((n, acc))
    return SpectralOperator(alpha, Vector(tuple(dev_entries)), family)


def resolvent(z: Scalar, lam: Vector,
              family: OrthonormalFamily = CANONICAL,
              precision: int = DEFAULT_PRECISION) -> SpectralOperator:
    """(z*Id - T_lambda)^-1 = (1/z)Id + (1/z) sum w_i P_i, w_i =
    lambda_i/(z - lambda_i), each entry inverted to the given precision.

    Raises SpectralPoint when z is an eigenvalue (including z = 0, the
    eigenvalue shared by every finitely supported lambda).
    """
    spec = spectrum_of(lam)
    if spec.contains(z):
        raise SpectralPoint("z lies in the spectrum of T_lambda")
    inv_z = z.inverse(precision)
    entries = []
    for i, lam_i in lam.entries:
        w_i = lam_i * (z - lam_i).inverse(precision)
        entries.append((i, inv_z * w_i))
    return SpectralOperator(inv_z, Vector(tuple(entries)), family)


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of the constant-on-classes test, with its witness.

    On success ``table`` holds the induced function on the spectrum
    (value at 0 and one value per nonzero eigenvalue); on failure
    ``violation`` is a pair of indices in one class where the deviation
    disagrees.
    """

    member: bool
    table: "ValueTable | None" = None
    violation: tuple[int, int] | None = None


def membership(h: SpectralOperator, lam: Vector) -> MembershipResult:
    """Decide whether h = (alpha, mu) lies in the algebra generated by
    Id and T_lambda: mu must be constant on every equality class of
    lambda and vanish where lambda does."""
    spec = spectrum_of(lam)
    mu = h.lam
    lam_support = set(lam.support)
    for n in mu.support:
        if n not in lam_support:
            # n sits in the zero class, along with any fresh index.
            partner = next(i for i in range(1, max(n, lam.max_index) + 2)
                           if i != n and i not in lam_support)
            return MembershipResult(False, violation=(n, partner))
    values = []
    for value, indices in spec.classes:
        first = mu.get(indices[0])
        for other in indices[1:]:
            if mu.get(other) != first:
                return MembershipResult(False,
                                        violation=(indices[0], other))
        values.append((value, h.alpha + first))
    table = ValueTable(h.alpha, tuple(values))
    return MembershipResult(True, table=table)


@dataclass(frozen=True)
class Idempotent:
    """A classified idempotent: a sum of class projections, or the
    identity minus one."""

    complemented: bool
    indices: tuple[int, ...]
    operator: SpectralOperator

    @property
    def form(self) -> str:
        inner = "+".join(f"P{i}" for i in self.indices) or "0"
        return f"Id-({inner})" if self.complemented else inner


def classify_idempotent(h: SpectralOperator) -> Idempotent:
    """Check h*h = h and read off which of the two shapes h takes.

    With alpha = 0 the deviation entries must all be 1 (a plain sum of
    projections); with alpha = 1 they must all be -1 (a complement).
    """
    if h * h != h:
        raise NotIdempotent(f"{h} squares to {h * h}")
    one = Scalar.one()
    if h.alpha.is_zero:
        indices = tuple(i for i, _ in h.lam.entries)
        return Idempotent(False, indices, h)
    if h.alpha == one:
        indices = tuple(i for i, _ in h.lam.entries)
        return Idempotent(True, indices, h)
    raise NotIdempotent(f"alpha = {h.alpha} is neither 0 nor 1")


@dataclass(frozen=True)
class SigmaClopen:
    """A clopen subset of the spectrum: finitely many nonzero
    eigenvalues, or the complement (which contains 0)."""

    complemented: bool
    values: tuple[Scalar, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.values),
                               key=lambda s: s.sort_key()))
        for v in ordered:
            if v.is_zero:
                raise UnknownEigenvalue(
                    "0 belongs to every cofinite piece, never listed")
        object.__setattr__(self, "values", ordered)

    @classmethod
    def of(cls, values: Sequence[Scalar]) -> "SigmaClopen":
        return cls(False, tuple(values))

    @classmethod
    def without(cls, values: Sequence[Scalar]) -> "SigmaClopen":
        return cls(True, tuple(values))

    @property
    def is_empty(self) -> bool:
        return not self.complemented and not self.values


def sigma_measure(c: SigmaClopen, lam: Vector,
                  family: OrthonormalFamily = CANONICAL) -> Idempotent:
    """The spectral measure of a clopen piece of the spectrum.

    A finite set of nonzero eigenvalues maps to the sum of their class
    projections; the complement maps to identity minus that sum.
    """
    spec = spectrum_of(lam)
    indices: list[int] = []
    for v in c.values:
        indices.extend(spec.class_of(v))
    indices.sort()
    one = Scalar.one()
    if c.complemented:
        dev = Vector(tuple((i, Scalar.rational(-1)) for i in indices))
        op = SpectralOperator(one, dev, family)
    else:
        dev = Vector(tuple((i, one) for i in indices))
        op = SpectralOperator(Scalar.zero(), dev, family)
    return Idempotent(c.complemented, tuple(indices), op)


@dataclass(frozen=True)
class ValueTable:
    """A function on the spectrum as a finite table: value at 0 plus one
    value per nonzero eigenvalue."""

    at_zero: Scalar
    values: tuple[tuple[Scalar, Scalar], ...]

    def value_at(self, eigenvalue: Scalar) -> Scalar:
        if eigenvalue.is_zero:
            return self.at_zero
        for v, fv in self.values:
            if v == eigenvalue:
                return fv
        raise MissingValue(f"no value at eigenvalue {eigenvalue}")

    @classmethod
    def from_mapping(cls, at_zero: Scalar,
                     mapping: Mapping[Scalar, Scalar]) -> "ValueTable":
        pairs = sorted(mapping.items(), key=lambda kv: kv[0].sort_key())
        return cls(at_zero, tuple(pairs))

    @classmethod
    def identity_on(cls, spectrum: Spectrum) -> "ValueTable":
        return cls(Scalar.zero(),
                   tuple((v, v) for v in spectrum.nonzero))

    @classmethod
    def constant_on(cls, spectrum: Spectrum, c: Scalar) -> "ValueTable":
        return cls(c, tuple((v, c) for v in spectrum.nonzero))


def sigma_integrate(table: ValueTable, lam: Vector,
                    family: OrthonormalFamily = CANONICAL
                    ) -> SpectralOperator:
    """Integrate a value table against the spectral measure of T_lambda.

    Closed form: f(0)*Id + sum over classes of (f(value) - f(0)) times
    the class projection.  The identity table returns T_lambda itself
    and the constant 1 returns the identity.
    """
    spec = spectrum_of(lam)
    entries = []
    for value, indices in spec.classes:
        delta = table.value_at(value) - table.at_zero
        for i in indices:
            entries.append((i, delta))
    return SpectralOperator(table.at_zero, Vector(tuple(entries)), family)
