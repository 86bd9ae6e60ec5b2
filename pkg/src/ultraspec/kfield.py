"""Exact arithmetic in the base field K = Q((t)).

Every scalar is a formal Laurent series over the rationals, stored as a
finite list of (exponent, coefficient) terms plus an optional precision
marker: precision P means coefficients at exponents >= P are unknown,
written O(t^P).  Exact values carry no marker.  The t-adic valuation
(the lowest exponent with a nonzero coefficient) is the only measure of
size used anywhere in the package; norms are never materialized as real
numbers, only compared through valuations.

The residue field of K is Q, which is formally real: a sum of nonzero
rational squares is never zero.  That anisotropy is what makes the
bilinear form on the sequence space an inner product, and it surfaces
here as the identity v(sum of squares) = 2 * min valuation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Union

from .errors import ImpreciseZero, ParseError, ZeroDivision

#: Series precision used when a division has no exact finite answer.
DEFAULT_PRECISION = 12

#: Valuation of the exact zero scalar.
INFINITE = math.inf

Valuation = Union[int, Fraction, float]


@total_ordering
@dataclass(frozen=True, slots=True)
class NormValue:
    """A non-archimedean norm, recorded through its valuation.

    The norm of a scalar with valuation v is conceptually r**-v for some
    fixed r > 1, but r is never chosen: all comparisons happen on v.
    Half-integer valuations appear transiently as square roots of norms
    with odd valuation.  Ordering follows norm size, so a larger
    valuation compares as *smaller* and the infinite valuation (the zero
    element) is the minimum.
    """

    val: Valuation

    def __post_init__(self):
        v = self.val
        if isinstance(v, Fraction):
            if v.denominator == 1:
                object.__setattr__(self, "val", int(v))
            elif v.denominator != 2:
                raise ValueError(f"norm valuations live in (1/2)Z, got {v}")

    def __lt__(self, other: "NormValue") -> bool:
        return self.val > other.val

    @property
    def is_zero(self) -> bool:
        return self.val == INFINITE

    def sqrt(self) -> "NormValue":
        if self.is_zero:
            return self
        return NormValue(Fraction(self.val) / 2)

    def scaled(self, n: int) -> "NormValue":
        """Valuation of an n-th power."""
        if self.is_zero:
            return self
        return NormValue(self.val * n)

    def __str__(self) -> str:
        return "zero" if self.is_zero else f"val={self.val}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational coefficient: {x!r}")


@dataclass(frozen=True, slots=True)
class Scalar:
    """An element of Q((t)): finite Laurent terms plus optional O(t^P).

    Invariants (normalized on construction): coefficients are nonzero
    rationals, exponents are strictly increasing and all below the
    precision cutoff.  The exact zero has no terms and no marker; a
    termless scalar with finite precision is an "imprecise zero" whose
    valuation is only bounded below.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()
    precision: int | None = None

    def __post_init__(self):
        cleaned = []
        for exp, coeff in self.terms:
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            if self.precision is not None and exp >= self.precision:
                continue
            cleaned.append((int(exp), coeff))
        cleaned.sort(key=lambda tc: tc[0])
        for (e1, _), (e2, _) in zip(cleaned, cleaned[1:]):
            if e1 == e2:
                raise ValueError(f"duplicate exponent {e1}")
        object.__setattr__(self, "terms", tuple(cleaned))

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return _ZERO

    @classmethod
    def one(cls) -> "Scalar":
        return _ONE

    @classmethod
    def rational(cls, value) -> "Scalar":
        c = _as_fraction(value)
        return cls(((0, c),)) if c else _ZERO

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "Scalar":
        c = _as_fraction(coeff)
        return cls(((exponent, c),)) if c else _ZERO

    @classmethod
    def t(cls, exponent: int = 1) -> "Scalar":
        return cls.monomial(exponent)

    @classmethod
    def from_map(cls, coeffs: Mapping[int, object],
                 precision: int | None = None) -> "Scalar":
        return cls(tuple((e, _as_fraction(c)) for e, c in coeffs.items()),
                   precision)

    @classmethod
    def unknown(cls, precision: int) -> "Scalar":
        """The pure O(t^P) value: nothing known below the cutoff."""
        return cls((), precision)

    # -- structure -----------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    @property
    def is_zero(self) -> bool:
        """True only for the exact zero."""
        return not self.terms and self.precision is None

    @property
    def is_termless(self) -> bool:
        return not self.terms

    def coeff(self, exponent: int) -> Fraction:
        for exp, c in self.terms:
            if exp == exponent:
                return c
        return Fraction(0)

    def leading(self) -> tuple[int, Fraction]:
        if not self.terms:
            raise ZeroDivision("no known leading term")
        return self.terms[0]

    def valuation(self) -> Valuation:
        """Lowest exponent with a nonzero coefficient; +inf for zero."""
        if self.terms:
            return self.terms[0][0]
        if self.precision is None:
            return INFINITE
        raise ImpreciseZero(
            f"valuation only bounded below by O(t^{self.precision})")

    def norm(self) -> NormValue:
        return NormValue(self.valuation())

    @property
    def is_rational_monomial(self) -> bool:
        return len(self.terms) == 1 and self.precision is None

    def sort_key(self):
        prec = self.precision if self.precision is not None else INFINITE
        return (self.terms, prec)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        prec = _min_precision(self.precision, other.precision)
        coeffs: dict[int, Fraction] = dict(self.terms)
        for exp, c in other.terms:
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + c
        return Scalar(tuple(coeffs.items()), prec)

    def __neg__(self) -> "Scalar":
        return Scalar(tuple((e, -c) for e, c in self.terms), self.precision)

    def __sub__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return _ZERO
        prec = _product_precision(self, other)
        coeffs: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                if prec is not None and e >= prec:
                    continue
                coeffs[e] = coeffs.get(e, Fraction(0)) + c1 * c2
        return Scalar(tuple(coeffs.items()), prec)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = _ONE
        for _ in range(n):
            result = result * self
        return result

    def inverse(self, target_precision: int = DEFAULT_PRECISION) -> "Scalar":
        """Multiplicative inverse, truncated unless the input is a monomial.

        For a with valuation v the result b satisfies a*b = 1 + O(t^(P+2v))
        where P is the target precision; b carries the explicit marker
        O(t^(P+v)).  Rational monomials invert exactly.
        """
        if self.is_zero:
            raise ZeroDivision("inverse of the exact zero")
        if not self.terms:
            raise ZeroDivision(
                f"no known leading coefficient below O(t^{self.precision})")
        v, lead = self.terms[0]
        if self.is_rational_monomial:
            return Scalar.monomial(-v, 1 / lead)
        # Invert the valuation-zero unit part u = a * t^-v by the standard
        # convolution recurrence, to enough relative terms that the
        # contract a*b = 1 + O(t^(P+2v)) holds.
        rel = target_precision + 2 * v
        if self.precision is not None:
            rel = min(rel, self.precision - v)
        out_prec = rel - v
        if rel <= 0:
            return Scalar((), out_prec)
        unit = {e - v: c for e, c in self.terms}
        inv = [Fraction(0)] * rel
        inv[0] = 1 / lead
        for n in range(1, rel):
            acc = Fraction(0)
            for k, ck in unit.items():
                if 0 < k <= n:
                    acc += ck * inv[n - k]
            inv[n] = -acc / lead
        return Scalar(tuple((n - v, c) for n, c in enumerate(inv) if c),
                      out_prec)

    # -- comparisons ----------------------------------------------------

    def congruent(self, other: "Scalar", modulus: int) -> bool:
        """Whether self == other modulo t^modulus.

        Raises ImpreciseZero if the difference is only known to a
        precision below the modulus, so a truncated value can never
        silently pass for an exact one.
        """
        diff = self - other
        if any(exp < modulus for exp, _ in diff.terms):
            return False
        if diff.precision is not None and diff.precision < modulus:
            raise ImpreciseZero(
                f"difference known only up to O(t^{diff.precision}), "
                f"cannot test modulo t^{modulus}")
        return True

    def truncated(self, precision: int) -> "Scalar":
        prec = _min_precision(self.precision, precision)
        return Scalar(self.terms, prec)

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"


_ZERO = Scalar()
_ONE = Scalar(((0, Fraction(1)),))


def _min_precision(p: int | None, q: int | None) -> int | None:
    if p is None:
        return q
    if q is None:
        return p
    return min(p, q)


def _product_precision(a: Scalar, b: Scalar) -> int | None:
    """Precision of a*b from the O-term bookkeeping of both factors."""
    candidates = []
    if a.precision is not None:
        if b.terms:
            candidates.append(b.terms[0][0] + a.precision)
        if b.precision is not None:
            candidates.append(a.precision + b.precision)
    if b.precision is not None and a.terms:
        candidates.append(a.terms[0][0] + b.precision)
    return min(candidates) if candidates else None


def _exact_quotient(a: Scalar, b: Scalar) -> Scalar | None:
    """The exact Laurent quotient a/b when it exists, else None."""
    if not a.is_exact or not b.is_exact or b.is_zero:
        return None
    if a.is_zero:
        return a
    va, vb = a.terms[0][0], b.terms[0][0]
    da = a.terms[-1][0] - va
    db = b.terms[-1][0] - vb
    if db > da:
        return None
    rem = [Fraction(0)] * (da + 1)
    for e, c in a.terms:
        rem[e - va] = c
    bb = [Fraction(0)] * (db + 1)
    for e, c in b.terms:
        bb[e - vb] = c
    quot = [Fraction(0)] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = rem[k + db] / bb[db]
        quot[k] = c
        if c:
            for i in range(db + 1):
                rem[k + i] -= c * bb[i]
    if any(rem):
        return None
    return Scalar(tuple((k + va - vb, c) for k, c in enumerate(quot) if c))


def divide(a: Scalar, b: Scalar,
           precision: int = DEFAULT_PRECISION) -> Scalar:
    """a / b; exact whenever the quotient terminates, truncated otherwise."""
    exact = _exact_quotient(a, b)
    if exact is not None:
        return exact
    return a * b.inverse(precision)


def min_valuation(values: Iterable[Scalar]) -> Valuation:
    """Minimum valuation over a collection, +inf when empty or all zero.

    Imprecise zeros contribute only a lower bound; the result is still
    well defined as long as some known valuation sits at or below every
    such bound, otherwise ImpreciseZero is raised.
    """
    known: list[Valuation] = []
    bounds: list[int] = []
    for x in values:
        if x.terms:
            known.append(x.terms[0][0])
        elif x.precision is not None:
            bounds.append(x.precision)
    if not known:
        if bounds:
            raise ImpreciseZero(
                f"all values unknown below O(t^{min(bounds)})")
        return INFINITE
    lowest = min(known)
    if bounds and min(bounds) < lowest:
        raise ImpreciseZero(
            f"an O(t^{min(bounds)}) value could undercut valuation {lowest}")
    return lowest


# -- text syntax -------------------------------------------------------------
#
# A scalar is a sum of terms `c*t^k` with c a rational `p/q`; bare
# rationals, bare `t`, `t^k`, and a trailing `+ O(t^P)` marker are all
# accepted.  format_scalar() emits the canonical form that parse_scalar()
# round-trips.

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<O>O\(\s*t\s*\^\s*(?P<oprec>-?\d+)\s*\))
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<t>t(?:\s*\^\s*(?P<exp>-?\d+))?)
  | (?P<star>\*)
  | (?P<plus>\+)
  | (?P<minus>-)
""", re.VERBOSE)


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical scalar syntax, e.g. ``1/2*t^-1 + 3 - 2*t^2``."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} in scalar",
                             column=pos + 1)
        if not m.group("ws"):
            tokens.append((m, pos))
        pos = m.end()
    if not tokens:
        raise ParseError("empty scalar", column=1)

    coeffs: dict[int, Fraction] = {}
    precision: int | None = None
    i = 0
    sign: int | None = 1      # pending sign; None once a term consumed it
    at_start = True
    while i < len(tokens):
        m, at = tokens[i]
        kind = m.lastgroup
        if kind in ("plus", "minus"):
            if sign is None:              # separator between terms
                sign = -1 if kind == "minus" else 1
            elif at_start:                # single leading sign
                if kind == "plus":
                    raise ParseError("leading '+' not allowed", column=at + 1)
                sign = -1
                at_start = False
            else:
                raise ParseError("two consecutive signs", column=at + 1)
            i += 1
            continue
        if sign is None:
            raise ParseError("missing '+' or '-' between terms",
                             column=at + 1)
        if kind == "O":
            if sign == -1:
                raise ParseError("O(t^P) cannot be subtended by '-'",
                                 column=at + 1)
            if i + 1 != len(tokens):
                raise ParseError("O(t^P) must be the final term",
                                 column=at + 1)
            precision = int(m.group("oprec"))
            i += 1
            sign = None
            continue
        if kind == "rational":
            coeff = Fraction(m.group("rational")) * sign
            exp = 0
            i += 1
            if i < len(tokens) and tokens[i][0].lastgroup == "star":
                star_at = tokens[i][1]
                i += 1
                if i >= len(tokens) or tokens[i][0].lastgroup != "t":
                    raise ParseError("expected t or t^k after '*'",
                                     column=star_at + 2)
                tm = tokens[i][0]
                exp = int(tm.group("exp")) if tm.group("exp") else 1
                i += 1
        elif kind == "t":
            coeff = Fraction(sign)
            exp = int(m.group("exp")) if m.group("exp") else 1
            i += 1
        else:
            raise ParseError(f"unexpected {m.group(0)!r}", column=at + 1)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coeff
        sign = None
        at_start = False
    if sign is not None:
        raise ParseError("dangling sign at end of scalar",
                         column=len(text))
    return Scalar(tuple(coeffs.items()), precision)


def _format_term(exp: int, coeff: Fraction) -> str:
    mag = abs(coeff)
    if exp == 0:
        return str(mag)
    t = "t" if exp == 1 else f"t^{exp}"
    if mag == 1:
        return t
    return f"{mag}*{t}"


def format_scalar(x: Scalar) -> str:
    """Canonical text form: ascending exponents, explicit O(t^P) marker."""
    if x.is_zero:
        return "0"
    parts = []
    for idx, (exp, coeff) in enumerate(x.terms):
        term = _format_term(exp, coeff)
        if idx == 0:
            parts.append(f"-{term}" if coeff < 0 else term)
        else:
            parts.append(f"- {term}" if coeff < 0 else f"+ {term}")
    if x.precision is not None:
        parts.append(f"+ O(t^{x.precision})")
    if not x.terms:
        return f"O(t^{x.precision})"
    return " ".join(parts)
