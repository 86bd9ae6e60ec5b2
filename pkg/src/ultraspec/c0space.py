"""The sequence space c0 over K, with its inner product and projections.

Vectors are finitely supported maps from 1-based indices to nonzero
scalars.  The bilinear form <x,y> = sum x_i*y_i is an inner product
because the residue field is formally real, and the sup norm coincides
with sqrt|<x,x>| at the valuation level: v(<x,x>) = 2 * min entry
valuation, exactly.

Orthonormal families normalize to v(<y,y>) = 0 rather than <y,y> = 1;
square roots need not exist in K and only the unit norm is ever used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DependentInput, ZeroDirection
from .kfield import (DEFAULT_PRECISION, NormValue, Scalar, divide,
                     min_valuation)


@dataclass(frozen=True, slots=True)
class Vector:
    """A finitely supported element of c0: sorted (index, scalar) pairs."""

    entries: tuple[tuple[int, Scalar], ...] = ()

    def __post_init__(self):
        cleaned = [(int(i), x) for i, x in self.entries if not x.is_zero]
        cleaned.sort(key=lambda ix: ix[0])
        for (i, _), (j, _) in zip(cleaned, cleaned[1:]):
            if i == j:
                raise ValueError(f"duplicate index {i}")
        if cleaned and cleaned[0][0] < 1:
            raise ValueError("indices are 1-based")
        object.__setattr__(self, "entries", tuple(cleaned))

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "Vector":
        return _THETA

    @classmethod
    def basis(cls, i: int) -> "Vector":
        return cls(((i, Scalar.one()),))

    @classmethod
    def of(cls, values: Sequence[Scalar]) -> "Vector":
        """Build from a dense 1-based listing; zeros are dropped."""
        return cls(tuple((i + 1, x) for i, x in enumerate(values)))

    @classmethod
    def of_rationals(cls, values: Sequence) -> "Vector":
        return cls.of([Scalar.rational(v) for v in values])

    # -- structure ------------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def get(self, i: int) -> Scalar:
        for j, x in self.entries:
            if j == i:
                return x
        return Scalar.zero()

    def values(self) -> Iterable[Scalar]:
        return (x for _, x in self.entries)

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        acc = dict(self.entries)
        for i, x in other.entries:
            acc[i] = acc[i] + x if i in acc else x
        return Vector(tuple(acc.items()))

    def __neg__(self) -> "Vector":
        return Vector(tuple((i, -x) for i, x in self.entries))

    def __sub__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "Vector":
        if c.is_zero:
            return _THETA
        return Vector(tuple((i, c * x) for i, x in self.entries))

    def pointwise(self, other: "Vector") -> "Vector":
        """Componentwise product; the multiplication making c0 an algebra."""
        mine = dict(self.entries)
        return Vector(tuple((i, mine[i] * x)
                            for i, x in other.entries if i in mine))

    def congruent(self, other: "Vector", modulus: int) -> bool:
        indices = set(self.support) | set(other.support)
        return all(self.get(i).congruent(other.get(i), modulus)
                   for i in sorted(indices))

    def __str__(self) -> str:
        inner = ", ".join(str(self.get(i))
                          for i in range(1, self.max_index + 1))
        return f"[{inner}]"


_THETA = Vector()


def inner_product(x: Vector, y: Vector) -> Scalar:
    """<x,y> = sum over the common support of x_i * y_i, exactly."""
    acc = Scalar.zero()
    ys = dict(y.entries)
    for i, xi in x.entries:
        if i in ys:
            acc = acc + xi * ys[i]
    return acc


def sup_norm(x: Vector) -> NormValue:
    """Minimum entry valuation; the zero vector has the zero norm."""
    return NormValue(min_valuation(x.values()))


def project(y: Vector, x: Vector,
            precision: int = DEFAULT_PRECISION) -> Vector:
    """The normal projection onto span{y}: P(x) = (<x,y>/<y,y>) y.

    Exact whenever <y,y> is a rational monomial (canonical vectors,
    rational y, normalized families over monomial entries); otherwise
    the coefficient is a truncated series at the given precision.
    """
    if y.is_zero:
        raise ZeroDirection("cannot project onto the zero vector")
    coeff = divide(inner_product(x, y), inner_product(y, y), precision)
    return y.scale(coeff)


@dataclass(frozen=True)
class OrthonormalFamily:
    """Pairwise orthogonal vectors with v(<y,y>) = 0, i.e. unit sup norm.

    The canonical family is the standard basis e_1, e_2, ...; it has no
    stored members and serves any index.  Explicit families validate
    orthonormality on construction, so holding a reference to one is a
    proof of the invariants.
    """

    members: tuple[Vector, ...] = ()
    canonical: bool = False

    def __post_init__(self):
        if self.canonical:
            if self.members:
                raise ValueError("the canonical family stores no members")
            return
        for k, y in enumerate(self.members, start=1):
            if y.is_zero:
                raise ValueError(f"member {k} is the zero vector")
            if inner_product(y, y).valuation() != 0:
                raise ValueError(f"member {k} has <y,y> valuation != 0")
        for a in range(len(self.members)):
            for b in range(a + 1, len(self.members)):
                if not inner_product(self.members[a], self.members[b]).is_zero:
                    raise ValueError(f"members {a + 1},{b + 1} not orthogonal")

    @property
    def size(self) -> int | None:
        """Number of members; None for the unbounded canonical family."""
        return None if self.canonical else len(self.members)

    def member(self, i: int) -> Vector:
        if self.canonical:
            return Vector.basis(i)
        return self.members[i - 1]

    def gram(self, i: int) -> Scalar:
        """<y_i, y_i>; always valuation 0."""
        if self.canonical:
            return Scalar.one()
        y = self.members[i - 1]
        return inner_product(y, y)

    def gram_inverse(self, i: int,
                     precision: int = DEFAULT_PRECISION) -> Scalar:
        """1/<y_i,y_i>: the one factor both matrix routes multiply by,
        so their results agree entry for entry including precision."""
        return self.gram(i).inverse(precision)

    def covers(self, index: int) -> bool:
        return self.canonical or index <= len(self.members)

    def max_support(self, default: int = 0) -> int:
        """Largest canonical index any member touches."""
        if self.canonical:
            return default
        return max((y.max_index for y in self.members), default=0)

    def __str__(self) -> str:
        if self.canonical:
            return "canonical"
        return "{" + ", ".join(str(y) for y in self.members) + "}"


CANONICAL = OrthonormalFamily(canonical=True)


def gram_schmidt(vectors: Sequence[Vector]) -> OrthonormalFamily:
    """Orthogonalize exactly and rescale each output to unit sup norm.

    The elimination is fraction-free (each new vector is cleared against
    the previous ones using exact cross products), so orthogonality is
    exact whatever the entries.  Rescaling multiplies by a power of t --
    v(<u,u>) is even by formal reality -- and, when every previous
    self-pairing is rational, divides by their product to match the
    classical textbook output.
    """
    basis: list[Vector] = []
    grams: list[Scalar] = []
    for k, v in enumerate(vectors, start=1):
        u = v
        scale_back = Scalar.one()
        for y, g in zip(basis, grams):
            # u <- g*u - <u,y> y keeps coordinates polynomial; remember
            # the accumulated factor to undo it when g stays rational.
            c = inner_product(u, y)
            u = u.scale(g) - y.scale(c)
            scale_back = scale_back * g
        if u.is_zero:
            raise DependentInput(f"vector {k} depends on its predecessors")
        if scale_back.is_rational_monomial and scale_back != Scalar.one():
            u = u.scale(scale_back.inverse())
        g = inner_product(u, u)
        val = g.valuation()
        assert val % 2 == 0, "self-pairing valuation is even over Q((t))"
        if val:
            u = u.scale(Scalar.t(-val // 2))
        basis.append(u)
        grams.append(inner_product(u, u))
    return OrthonormalFamily(tuple(basis))
