"""The projection-valued measure on the clopen subsets of N*.

Clopen subsets of the one-point compactification N* come in two kinds:
finite subsets of N, and complements of finite subsets (these contain
the point at infinity).  The measure sends a finite set to the sum of
the corresponding projections and a cofinite set to the identity minus
that sum; it is finitely additive, multiplicative on intersections, and
every nonempty value is a normal projection of norm one.

Integration of a continuous function against the measure is a limit of
tagged-partition sums over refining clopen partitions.  For finitely
supported functions the limit is attained at any partition fine enough
to separate the support, and a closed form reads it off directly; the
refinement chains produced here let tests watch the error valuation
climb to infinity step by step.

Scalar measures <m(.)x, y> and the matrix of integrals <H e_i, e_j>
give every operator in the algebra an infinite-matrix picture whose
entrywise sup norm matches the function sup norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .c0space import CANONICAL, OrthonormalFamily, Vector, inner_product
from .errors import (DimensionTooSmall, FamilyTooSmall, InvalidPartition,
                     ValidationError)
from .kfield import DEFAULT_PRECISION, NormValue, Scalar, min_valuation
from .gelfand import (NStarFunction, SpectralOperator, apply_spectral,
                      inverse_gelfand)

#: The point at infinity, usable as a partition tag.
INFINITY_POINT = math.inf


@dataclass(frozen=True)
class Clopen:
    """A clopen subset of N*: finite, or cofinite (containing infinity)."""

    cofinite: bool
    base: tuple[int, ...] = ()

    def __post_init__(self):
        base = tuple(sorted(set(int(b) for b in self.base)))
        if base and base[0] < 1:
            raise ValidationError("clopen base points are 1-based")
        object.__setattr__(self, "base", base)

    @classmethod
    def finite(cls, points: Iterable[int]) -> "Clopen":
        return cls(False, tuple(points))

    @classmethod
    def cofinite_of(cls, removed: Iterable[int]) -> "Clopen":
        return cls(True, tuple(removed))

    @classmethod
    def empty(cls) -> "Clopen":
        return cls(False, ())

    @classmethod
    def whole(cls) -> "Clopen":
        return cls(True, ())

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.base

    def contains(self, point) -> bool:
        if point == INFINITY_POINT:
            return self.cofinite
        return (point not in self.base) if self.cofinite else (
            point in self.base)

    def union(self, other: "Clopen") -> "Clopen":
        a, b = set(self.base), set(other.base)
        if not self.cofinite and not other.cofinite:
            return Clopen(False, tuple(a | b))
        if self.cofinite and other.cofinite:
            return Clopen(True, tuple(a & b))
        fin, cof = (a, b) if not self.cofinite else (b, a)
        return Clopen(True, tuple(cof - fin))

    def intersect(self, other: "Clopen") -> "Clopen":
        a, b = set(self.base), set(other.base)
        if not self.cofinite and not other.cofinite:
            return Clopen(False, tuple(a & b))
        if self.cofinite and other.cofinite:
            return Clopen(True, tuple(a | b))
        fin, cof = (a, b) if not self.cofinite else (b, a)
        return Clopen(False, tuple(fin - cof))

    def complement(self) -> "Clopen":
        return Clopen(not self.cofinite, self.base)

    def minus(self, other: "Clopen") -> "Clopen":
        return self.intersect(other.complement())

    def __str__(self) -> str:
        inner = ",".join(str(b) for b in self.base)
        return f"cofinite{{{inner}}}" if self.cofinite else f"finite{{{inner}}}"


def clopen_algebra(op: str, a: Clopen, b: Clopen | None = None) -> Clopen:
    """Named dispatch: 'union', 'intersect', or 'complement' (unary)."""
    if op == "union":
        return a.union(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "complement":
        return a.complement()
    raise ValueError(f"unknown clopen operation {op!r}")


def measure(c: Clopen, family: OrthonormalFamily = CANONICAL
            ) -> SpectralOperator:
    """The projection attached to a clopen set.

    Empty -> zero operator; all of N* -> identity; a finite set -> the
    sum of its projections; a cofinite set -> identity minus the sum
    over the removed points.
    """
    if not family.covers(max(c.base, default=0)):
        raise FamilyTooSmall(
            f"clopen base reaches {max(c.base, default=0)}, family has "
            f"{family.size} members")
    one = Scalar.one()
    if c.cofinite:
        dev = Vector(tuple((i, Scalar.rational(-1)) for i in c.base))
        return SpectralOperator(one, dev, family)
    dev = Vector(tuple((i, one) for i in c.base))
    return SpectralOperator(Scalar.zero(), dev, family)


@dataclass(frozen=True)
class TaggedPartition:
    """Disjoint clopen pieces covering a target, each with a tag inside it."""

    pieces: tuple[tuple[Clopen, object], ...]

    def target(self) -> Clopen:
        acc = Clopen.empty()
        for piece, _ in self.pieces:
            acc = acc.union(piece)
        return acc

    def validate(self, target: Clopen | None = None) -> Clopen:
        covered = Clopen.empty()
        for idx, (piece, tag) in enumerate(self.pieces, start=1):
            if piece.is_empty:
                raise InvalidPartition(f"piece {idx} is empty")
            if not piece.contains(tag):
                raise InvalidPartition(
                    f"tag {tag} not inside piece {idx} ({piece})")
            if not covered.intersect(piece).is_empty:
                raise InvalidPartition(f"piece {idx} overlaps its siblings")
            covered = covered.union(piece)
        if target is not None and covered != target:
            raise InvalidPartition(
                f"pieces cover {covered}, expected {target}")
        return covered


def riemann_sum(f: NStarFunction, partition: TaggedPartition,
                family: OrthonormalFamily = CANONICAL) -> SpectralOperator:
    """sum over pieces of f(tag) * measure(piece), exactly."""
    partition.validate()
    acc = SpectralOperator.zero(family)
    for piece, tag in partition.pieces:
        acc = acc + measure(piece, family).scale(f.value_at(tag))
    return acc


def integrate(f: NStarFunction, c: Clopen,
              family: OrthonormalFamily = CANONICAL) -> SpectralOperator:
    """The integral of f over c against the measure, in closed form.

    This is the operator whose transform is the pointwise product of f
    with the indicator of c; it equals the tagged sum for any partition
    of c separating support(f) within c, which is how the net limit is
    attained at a finite stage.
    """
    support_max = max((f.deviations.max_index, max(c.base, default=0)))
    if not family.covers(support_max):
        raise FamilyTooSmall(
            f"support reaches {support_max}, family has {family.size} "
            f"members")
    if c.cofinite:
        entries = [(n, -f.at_infinity) for n in c.base]
        entries.extend((n, d) for n, d in f.deviations.entries
                       if n not in c.base)
        return SpectralOperator(f.at_infinity, Vector(tuple(entries)),
                                family)
    values = [(n, f.value_at(n)) for n in c.base]
    return SpectralOperator(Scalar.zero(), Vector(tuple(values)), family)


def refinement_chain(f: NStarFunction, c: Clopen,
                     family: OrthonormalFamily = CANONICAL
                     ) -> list[TaggedPartition]:
    """Deterministic chain of partitions of c with growing separation.

    Stage k isolates the first k relevant points (the support of f's
    deviations together with the base of c, intersected with c) into
    singleton pieces; the final stage separates them all, where the
    tagged sum equals the integral exactly.
    """
    relevant = sorted(set(f.deviations.support) | set(c.base))
    relevant = [n for n in relevant if c.contains(n)]
    chain = []
    for k in range(len(relevant) + 1):
        pieces: list[tuple[Clopen, object]] = []
        isolated: set[int] = set()
        for n in relevant[:k]:
            pieces.append((Clopen.finite([n]), n))
            isolated.add(n)
        rest = c.minus(Clopen.finite(isolated))
        if not rest.is_empty:
            if rest.cofinite:
                pieces.append((rest, INFINITY_POINT))
            else:
                pieces.append((rest, rest.base[0]))
        chain.append(TaggedPartition(tuple(pieces)))
    return chain


@dataclass(frozen=True)
class ScalarMeasureView:
    """The scalar measure C -> <m(C) x, y> induced by a pair of vectors."""

    x: Vector
    y: Vector
    family: OrthonormalFamily = CANONICAL
    precision: int = DEFAULT_PRECISION

    def value(self, c: Clopen) -> Scalar:
        op = measure(c, self.family)
        return inner_product(apply_spectral(op, self.x, self.precision),
                             self.y)

    def integrate(self, f: NStarFunction) -> Scalar:
        op = integrate(f, Clopen.whole(), self.family)
        return inner_product(apply_spectral(op, self.x, self.precision),
                             self.y)


def scalar_measure_value(view: ScalarMeasureView, c: Clopen) -> Scalar:
    return view.value(c)


def scalar_integrate(view: ScalarMeasureView, f: NStarFunction) -> Scalar:
    """The integral of f against the scalar measure: <(integral f dm)x, y>."""
    return view.integrate(f)


@dataclass(frozen=True)
class MatrixRep:
    """The matrix of integrals Lambda_ij(f) = <H e_i, e_j>, H the operator
    with transform f.  Row index i is the first argument, so entry(i, j)
    pairs H(e_i) with e_j; the matrix is symmetric because H is."""

    entries: tuple[tuple[Scalar, ...], ...]
    source: NStarFunction

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i - 1][j - 1]

    def norm(self) -> NormValue:
        return NormValue(min_valuation(a for row in self.entries
                                       for a in row))


def matrix_rep(f: NStarFunction, family: OrthonormalFamily = CANONICAL,
               n: int = 8, precision: int = DEFAULT_PRECISION) -> MatrixRep:
    """Entries via the scalar-measure route, one integral per entry."""
    needed = max(f.deviations.max_index, family.max_support())
    if needed > n:
        raise DimensionTooSmall(
            f"window {n} cannot hold support up to {needed}")
    op = inverse_gelfand(f, family)
    rows = []
    for i in range(1, n + 1):
        image = apply_spectral(op, Vector.basis(i), precision)
        rows.append(tuple(inner_product(image, Vector.basis(j))
                          for j in range(1, n + 1)))
    return MatrixRep(tuple(rows), f)
