"""The invariant catalogue behind the ``verify`` command.

Each suite exercises one law of the library on deterministic fixtures
plus seeded random instances, and reports pass/fail with the first
violating witness.  Everything is exact: a suite never compares floats,
only valuations and exact equalities, so a failure is a genuine
counterexample and not noise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .c0space import (CANONICAL, OrthonormalFamily, Vector, gram_schmidt,
                      inner_product, project, sup_norm)
from .errors import DependentInput, SpectralPoint
from .gelfand import (NStarFunction, SpectralOperator, apply_spectral,
                      eigendecompose, function_norm, gelfand_transform,
                      inverse_gelfand, op_norm, power, spectral_norm,
                      to_matrix)
from .kfield import INFINITE, Scalar, min_valuation
from .lt_subalgebra import (SigmaClopen, ValueTable, classify_idempotent,
                            membership, resolvent, sigma_integrate,
                            sigma_measure, spectrum_of)
from .nstar_measure import (Clopen, ScalarMeasureView, integrate, matrix_rep,
                            measure, refinement_chain, riemann_sum)
from .operators import (MatrixOperator, adjoint, apply, certify_class,
                        compose, hs_inner, operator_norm,
                        summing_functional_matrix)

DEFAULT_SEED = 20240

VERIFY_PRECISION = 12


# -- seeded random fixtures ---------------------------------------------------

def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        f = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if f or not nonzero:
            return f


def random_scalar(rng: random.Random, min_exp: int = -2, max_exp: int = 6,
                  max_terms: int = 3, nonzero: bool = False) -> Scalar:
    while True:
        n_terms = rng.randint(0, max_terms)
        exps = rng.sample(range(min_exp, max_exp + 1),
                          min(n_terms, max_exp - min_exp + 1))
        coeffs = {e: random_rational(rng, nonzero=True) for e in exps}
        s = Scalar.from_map(coeffs)
        if not s.is_zero or not nonzero:
            return s


def random_vector(rng: random.Random, max_index: int = 6,
                  max_entries: int = 4, nonzero: bool = False,
                  min_exp: int = 0) -> Vector:
    while True:
        k = rng.randint(0, max_entries)
        indices = rng.sample(range(1, max_index + 1),
                             min(k, max_index))
        entries = tuple(
            (i, random_scalar(rng, min_exp=min_exp, max_exp=min_exp + 4,
                              nonzero=True))
            for i in indices)
        v = Vector(entries)
        if not v.is_zero or not nonzero:
            return v


def random_operator(rng: random.Random,
                    hard_case: bool = False) -> SpectralOperator:
    """A random element of the algebra over the canonical family.

    With hard_case=True the scalar part is forced to share the norm of
    the diagonal part, the only branch of the norm identity that needs
    an argument.
    """
    lam = random_vector(rng, nonzero=hard_case)
    if hard_case:
        v = min_valuation(lam.values())
        alpha = Scalar.monomial(int(v), random_rational(rng, nonzero=True))
    else:
        alpha = random_scalar(rng)
    return SpectralOperator(alpha, lam, CANONICAL)


def random_function(rng: random.Random) -> NStarFunction:
    return NStarFunction(random_scalar(rng), random_vector(rng))


def random_clopen(rng: random.Random, max_point: int = 6) -> Clopen:
    points = [p for p in range(1, max_point + 1) if rng.random() < 0.4]
    return Clopen(rng.random() < 0.5, tuple(points))


def rational_family() -> OrthonormalFamily:
    """A fixed non-canonical family with rational grams (exact divisions)."""
    return gram_schmidt([
        Vector.of_rationals([1, 1, 0, 0]),
        Vector.of_rationals([0, 1, 1, 0]),
        Vector.of_rationals([0, 0, 1, 2]),
    ])


# -- suite plumbing -----------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    checks: int
    passed: bool
    witness: str = ""


@dataclass
class _Suite:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, condition: bool, witness: str):
        self.checks += 1
        if not condition:
            self.failures.append(witness)

    def expect_raises(self, exc_type, fn, witness: str):
        self.checks += 1
        try:
            fn()
        except exc_type:
            return
        except Exception as exc:  # a different error is also a failure
            self.failures.append(f"{witness}: raised {type(exc).__name__}")
            return
        self.failures.append(f"{witness}: no error raised")

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.checks, not self.failures,
                           self.failures[0] if self.failures else "")


@dataclass(frozen=True)
class Extras:
    """User-supplied objects folded into the relevant suites."""

    operators: tuple[SpectralOperator, ...] = ()
    functions: tuple[NStarFunction, ...] = ()
    lambdas: tuple[Vector, ...] = ()
    clopens: tuple[Clopen, ...] = ()


# -- the catalogue ------------------------------------------------------------

def _suite_scalar_ultrametric(rng, extras):
    s = _Suite("scalar ultrametric laws")
    for _ in range(200):
        a = random_scalar(rng, nonzero=True)
        b = random_scalar(rng, nonzero=True)
        s.check((a * b).valuation() == a.valuation() + b.valuation(),
                f"v(ab) != v(a)+v(b) at a={a}, b={b}")
        c = a + b
        lo = min(a.valuation(), b.valuation())
        val = INFINITE if c.is_zero else c.valuation()
        s.check(val >= lo, f"v(a+b) < min at a={a}, b={b}")
        if a.valuation() != b.valuation():
            s.check(val == lo, f"strict triangle failed at a={a}, b={b}")
    return s.result()


def _suite_scalar_inversion(rng, extras):
    s = _Suite("scalar inversion contract")
    for _ in range(100):
        a = random_scalar(rng, nonzero=True)
        v = int(a.valuation())
        b = a.inverse(VERIFY_PRECISION)
        s.check((a * b).congruent(Scalar.one(), VERIFY_PRECISION + 2 * v),
                f"a*inv(a) != 1 mod t^(P+2v) at a={a}")
        if a.is_rational_monomial:
            s.check(a * b == Scalar.one(), f"monomial inverse inexact: {a}")
    return s.result()


def _suite_sum_of_squares(rng, extras):
    s = _Suite("sum of squares valuation (formal reality)")
    for _ in range(100):
        xs = [random_scalar(rng, nonzero=True)
              for _ in range(rng.randint(1, 5))]
        total = Scalar.zero()
        for x in xs:
            total = total + x * x
        lo = min(x.valuation() for x in xs)
        s.check(total.valuation() == 2 * lo,
                f"v(sum x^2) != 2 min v at xs={[str(x) for x in xs]}")
    return s.result()


def _suite_vector_norm(rng, extras):
    s = _Suite("vector norm identity v<x,x> = 2 sup-norm")
    for _ in range(200):
        x = random_vector(rng, min_exp=-2, nonzero=True)
        s.check(inner_product(x, x).valuation() == 2 * sup_norm(x).val,
                f"norm identity failed at x={x}")
    return s.result()


def _suite_cauchy_schwarz(rng, extras):
    s = _Suite("inner product bound |<x,y>| <= |x||y|")
    for _ in range(200):
        x = random_vector(rng, min_exp=-2)
        y = random_vector(rng, min_exp=-2)
        p = inner_product(x, y)
        if p.is_zero:
            s.check(True, "")
            continue
        s.check(p.valuation() >= sup_norm(x).val + sup_norm(y).val,
                f"bound failed at x={x}, y={y}")
    return s.result()


def _suite_gram_schmidt(rng, extras):
    s = _Suite("orthogonalization invariants")
    for _ in range(25):
        k = rng.randint(1, 3)
        vs = [random_vector(rng, max_index=4, nonzero=True)
              for _ in range(k)]
        try:
            fam = gram_schmidt(vs)
        except DependentInput:
            s.check(True, "")
            continue
        for i in range(1, len(fam.members) + 1):
            s.check(fam.gram(i).valuation() == 0,
                    f"member {i} gram valuation != 0")
            for j in range(i + 1, len(fam.members) + 1):
                s.check(inner_product(fam.member(i), fam.member(j)).is_zero,
                        f"members {i},{j} not orthogonal")
    s.expect_raises(DependentInput,
                    lambda: gram_schmidt([Vector.of_rationals([1, 0]),
                                          Vector.of_rationals([2, 0])]),
                    "collinear input accepted")
    return s.result()


def _suite_projection(rng, extras):
    s = _Suite("normal projection laws")
    for _ in range(50):
        # rational directions keep the projection coefficient exact
        y = Vector.of_rationals(
            [random_rational(rng) for _ in range(rng.randint(1, 4))])
        if y.is_zero:
            continue
        x = random_vector(rng)
        z = random_vector(rng)
        px = project(y, x)
        s.check(project(y, px) == px, f"not idempotent at y={y}, x={x}")
        s.check(inner_product(x - px, project(y, z)).is_zero,
                f"not normal at y={y}, x={x}, z={z}")
    return s.result()


def _suite_matrix_norm(rng, extras):
    s = _Suite("operator norm: column sup equals entry sup")
    for _ in range(50):
        n = rng.randint(1, 4)
        m = MatrixOperator(tuple(
            tuple(random_scalar(rng) for _ in range(n)) for _ in range(n)))
        by_entries = operator_norm(m)
        cols = [sup_norm(m.column(j)) for j in range(1, n + 1)]
        by_cols = max(cols) if cols else by_entries
        s.check(by_entries == by_cols, f"formulas disagree on {m.rows}")
    return s.result()


def _suite_adjoint(rng, extras):
    s = _Suite("adjoint involution, isometry, pairing identity")
    for _ in range(50):
        n = rng.randint(1, 4)
        m = MatrixOperator(tuple(
            tuple(random_scalar(rng) for _ in range(n)) for _ in range(n)))
        s.check(adjoint(adjoint(m)) == m, "involution failed")
        s.check(operator_norm(adjoint(m)) == operator_norm(m),
                "adjoint changed the norm")
        x = random_vector(rng, max_index=n)
        y = random_vector(rng, max_index=n)
        s.check(inner_product(apply(m, x), y)
                == inner_product(x, apply(adjoint(m), y)),
                f"<Tx,y> != <x,T*y> at dim {n}")
    return s.result()


def _suite_hs_inner(rng, extras):
    s = _Suite("trace-form pairing on decaying operators")
    for _ in range(40):
        n = rng.randint(1, 4)
        def rand_matrix():
            return MatrixOperator(tuple(
                tuple(random_scalar(rng) for _ in range(n))
                for _ in range(n)))
        a, b = rand_matrix(), rand_matrix()
        s.check(hs_inner(a, b) == hs_inner(b, a), "pairing not symmetric")
        if not all(x.is_zero for row in a.rows for x in row):
            s.check(hs_inner(a, a).valuation() == 2 * operator_norm(a).val,
                    f"v<T,T> != 2 v-norm at {a.rows}")
    return s.result()


def _suite_class_certificates(rng, extras):
    s = _Suite("operator class certificates")
    decaying = MatrixOperator.diagonal([Scalar.t(1), Scalar.t(2),
                                        Scalar.t(3)])
    cert = certify_class(decaying, "A1")
    s.check(cert.passed and cert.monotone_decay and cert.witness == (1, 2, 3),
            "decaying diagonal not certified")
    ident = MatrixOperator.identity(3)
    s.check(not certify_class(ident, "A1").monotone_decay,
            "identity flagged as decaying")
    summing = summing_functional_matrix(4)
    s.check(not certify_class(summing, "A0").monotone_decay,
            "summing functional flagged as decaying")
    s.check(certify_class(summing, "self_adjoint").passed is False,
            "summing functional is not symmetric")
    return s.result()


def _suite_unitization(rng, extras):
    s = _Suite("commutative unital algebra laws")
    ops = [random_operator(rng) for _ in range(30)]
    unit = SpectralOperator.unit()
    for i in range(0, len(ops) - 2, 3):
        a, b, c = ops[i], ops[i + 1], ops[i + 2]
        s.check(a * b == b * a, "multiplication not commutative")
        s.check((a * b) * c == a * (b * c), "multiplication not associative")
        s.check(a * (b + c) == a * b + a * c, "not distributive")
        s.check(a * unit == a, "unit law failed")
    return s.result()


def _suite_isometry(rng, extras):
    s = _Suite("norm = spectral norm = matrix norm")
    pool = [random_operator(rng, hard_case=(k % 3 == 0)) for k in range(40)]
    pool.extend(extras.operators)
    fam = rational_family()
    pool.append(SpectralOperator(Scalar.one() + Scalar.t(),
                                 Vector.of([Scalar.t(), Scalar.t(2)]), fam))
    for h in pool:
        n = max(h.lam.max_index, h.family.max_support(), 1) + 2
        a = op_norm(h)
        b = spectral_norm(h)
        c = operator_norm(to_matrix(h, n))
        s.check(a == b == c,
                f"isometry failed at H={h}: {a.val},{b.val},{c.val}")
    return s.result()


def _suite_power(rng, extras):
    s = _Suite("power multiplicative norm")
    pool = [random_operator(rng, hard_case=(k % 4 == 0)) for k in range(25)]
    pool.extend(extras.operators)
    for h in pool:
        base = op_norm(h)
        for n in range(2, 6):
            got = op_norm(power(h, n))
            want = base.scaled(n)
            s.check(got == want,
                    f"|H^{n}| != |H|^{n} at H={h}")
    return s.result()


def _suite_gelfand(rng, extras):
    s = _Suite("transform: homomorphism and roundtrip")
    pool = [random_operator(rng) for _ in range(40)]
    pool.extend(extras.operators)
    for i in range(0, len(pool) - 1, 2):
        h1, h2 = pool[i], pool[i + 1]
        if h1.family != h2.family:
            continue
        s.check(gelfand_transform(h1 * h2)
                == gelfand_transform(h1) * gelfand_transform(h2),
                "transform not multiplicative")
        s.check(gelfand_transform(h1 + h2)
                == gelfand_transform(h1) + gelfand_transform(h2),
                "transform not additive")
        s.check(function_norm(gelfand_transform(h1)) == op_norm(h1),
                f"transform not isometric at {h1}")
        s.check(inverse_gelfand(gelfand_transform(h1), h1.family) == h1,
                "inverse transform failed")
    s.check(gelfand_transform(SpectralOperator.unit())
            == NStarFunction.constant(Scalar.one()),
            "unit does not map to the constant 1")
    return s.result()


def _suite_measure_laws(rng, extras):
    s = _Suite("measure: additive, multiplicative, projection-valued")
    clopens = [random_clopen(rng) for _ in range(60)]
    clopens.extend(extras.clopens)
    clopens.extend([Clopen.empty(), Clopen.whole(),
                    Clopen.finite([1, 3]), Clopen.cofinite_of([2])])
    for i in range(0, len(clopens) - 1, 2):
        a, b = clopens[i], clopens[i + 1]
        disjoint_b = b.minus(a)
        s.check(measure(a.union(disjoint_b))
                == measure(a) + measure(disjoint_b),
                f"not additive at {a}, {disjoint_b}")
        s.check(measure(a.intersect(b)) == measure(a) * measure(b),
                f"not multiplicative at {a}, {b}")
    for c in clopens:
        mc = measure(c)
        s.check(mc * mc == mc, f"m({c}) not idempotent")
        if not c.is_empty:
            s.check(op_norm(mc).val == 0, f"norm of m({c}) not 1")
        x = random_vector(rng)
        z = random_vector(rng)
        px = apply_spectral(mc, x)
        pz = apply_spectral(mc, z)
        s.check(inner_product(x - px, pz).is_zero,
                f"m({c}) not a normal projection")
    return s.result()


def _suite_shrinking(rng, extras):
    s = _Suite("shrinking chains vanish at a finite stage")
    for _ in range(25):
        c = random_clopen(rng)
        chain = [c]
        # peel points off until empty; cofinite sets first drop to finite
        while not chain[-1].is_empty:
            cur = chain[-1]
            if cur.cofinite:
                nxt = Clopen.finite(
                    [p for p in range(1, 8) if cur.contains(p)])
            else:
                nxt = Clopen.finite(cur.base[1:])
            chain.append(nxt)
            if len(chain) > 20:
                break
        s.check(chain[-1].is_empty, f"chain from {c} never emptied")
        s.check(measure(chain[-1]) == SpectralOperator.zero(),
                "measure of the empty tail is not zero")
    return s.result()


def _suite_integration(rng, extras):
    s = _Suite("integration: closed form is the net limit")
    functions = [random_function(rng) for _ in range(20)]
    functions.extend(extras.functions)
    for f in functions:
        c = random_clopen(rng)
        closed = integrate(f, c)
        last_val = None
        for part in refinement_chain(f, c):
            diff = riemann_sum(f, part) - closed
            err = op_norm(diff).val
            if last_val is not None:
                s.check(err >= last_val,
                        f"error valuation decreased at f={f}, c={c}")
            last_val = err
        s.check(last_val == INFINITE,
                f"separated partition did not reach equality at f={f}, "
                f"c={c}")
    for c in [Clopen.empty(), Clopen.whole(), Clopen.finite([1, 3]),
              Clopen.cofinite_of([2])]:
        eta = (NStarFunction.indicator_cofinite(c.base) if c.cofinite
               else NStarFunction.indicator_of_points(c.base))
        s.check(integrate(eta, Clopen.whole()) == measure(c),
                f"integral of the indicator differs from m({c})")
    return s.result()


def _suite_scalar_measures(rng, extras):
    s = _Suite("scalar measures and their integrals")
    for _ in range(30):
        x = random_vector(rng)
        y = random_vector(rng)
        view = ScalarMeasureView(x, y)
        a, b = random_clopen(rng), random_clopen(rng)
        b = b.minus(a)
        s.check(view.value(a.union(b)) == view.value(a) + view.value(b),
                f"scalar measure not additive at x={x}, y={y}")
        f = random_function(rng)
        direct = inner_product(
            apply_spectral(integrate(f, Clopen.whole()), x), y)
        s.check(view.integrate(f) == direct,
                f"scalar integral mismatch at x={x}, y={y}")
    # entrywise sup of the basis measures is 1 on nonempty clopens
    for c in [Clopen.finite([1]), Clopen.cofinite_of([2]), Clopen.whole()]:
        vals = [ScalarMeasureView(Vector.basis(i), Vector.basis(j)).value(c)
                for i in range(1, 5) for j in range(1, 5)]
        s.check(min_valuation(vals) == 0,
                f"sup |m_ij({c})| != 1")
    return s.result()


def _suite_matrix_rep(rng, extras):
    s = _Suite("matrix of integrals: agreement and isometry")
    functions = [random_function(rng) for _ in range(25)]
    functions.extend(extras.functions)
    for f in functions:
        n = max(f.deviations.max_index, 1) + 2
        rep = matrix_rep(f, CANONICAL, n)
        other = to_matrix(inverse_gelfand(f, CANONICAL), n)
        same = all(rep.entry(i, j) == other.entry(i, j)
                   for i in range(1, n + 1) for j in range(1, n + 1))
        s.check(same, f"matrix rep differs from the direct matrix at f={f}")
        s.check(rep.norm() == function_norm(f),
                f"matrix norm differs from |f| at f={f}")
    return s.result()


def _suite_resolvent(rng, extras):
    s = _Suite("resolvent identities and spectral points")
    lambdas = [random_vector(rng, min_exp=1, nonzero=True)
               for _ in range(20)]
    lambdas.extend(extras.lambdas)
    for lam in lambdas:
        z = Scalar.rational(random_rational(rng, nonzero=True))
        spec = spectrum_of(lam)
        if spec.contains(z):
            continue
        r = resolvent(z, lam, precision=VERIFY_PRECISION)
        z_minus_t = (SpectralOperator(z, Vector.zero())
                     - SpectralOperator.diagonal(lam))
        ident = SpectralOperator.unit()
        s.check((z_minus_t * r).congruent(ident, VERIFY_PRECISION),
                f"(zId-T)R != Id at lam={lam}, z={z}")
        s.check((r * z_minus_t).congruent(ident, VERIFY_PRECISION),
                f"R(zId-T) != Id at lam={lam}, z={z}")
        if lam.entries:
            inside = lam.entries[0][1]
            s.expect_raises(SpectralPoint,
                            lambda: resolvent(inside, lam),
                            f"z={inside} in the spectrum accepted")
        s.expect_raises(SpectralPoint,
                        lambda: resolvent(Scalar.zero(), lam),
                        "z=0 accepted")
    return s.result()


def _suite_idempotents(rng, extras):
    s = _Suite("idempotent enumeration matches the classified forms")
    lam = Vector.of([Scalar.t(), Scalar.t(), Scalar.t(2),
                     Scalar.monomial(1, 2)])
    spec = spectrum_of(lam)
    k = len(spec.nonzero)
    support = lam.support
    found = 0
    candidates = list(iter_product([0, 1], *[[-1, 0, 1]] * len(support)))
    for alpha, *mus in candidates:
        h = SpectralOperator(
            Scalar.rational(alpha),
            Vector(tuple((i, Scalar.rational(m))
                         for i, m in zip(support, mus))))
        if h * h != h:
            continue
        if not membership(h, lam).member:
            continue
        found += 1
        idem = classify_idempotent(h)
        s.check(idem.operator == h, "classification changed the operator")
    s.check(found == 2 << k,
            f"found {found} idempotents, expected {2 << k}")
    return s.result()


def _suite_membership(rng, extras):
    s = _Suite("membership: constancy on classes, class-sum atomicity")
    lam = Vector.of([Scalar.monomial(1, 5), Scalar.monomial(1, 5),
                     Scalar.t(2)])
    single = SpectralOperator.projection(1)
    s.check(not membership(single, lam).member,
            "single projection of a size-2 class accepted")
    both = SpectralOperator(Scalar.zero(),
                            Vector.of([Scalar.one(), Scalar.one()]))
    s.check(membership(both, lam).member, "class sum rejected")
    const = SpectralOperator(random_scalar(rng), Vector.zero())
    s.check(membership(const, lam).member, "constant rejected")
    bad = membership(single, lam)
    s.check(bad.violation == (1, 2), "violating pair not reported")
    return s.result()


def _suite_sigma(rng, extras):
    s = _Suite("spectral measure on the spectrum and its integrals")
    lambdas = [Vector.of([Scalar.t(), Scalar.t(), Scalar.t(2)]),
               Vector.of([Scalar.monomial(0, 3), Scalar.t(4)])]
    lambdas.extend(extras.lambdas)
    for lam in lambdas:
        if lam.is_zero:
            continue
        spec = spectrum_of(lam)
        ident = ValueTable.identity_on(spec)
        s.check(sigma_integrate(ident, lam)
                == SpectralOperator.diagonal(lam),
                f"identity table did not integrate to T at lam={lam}")
        ones = ValueTable.constant_on(spec, Scalar.one())
        s.check(sigma_integrate(ones, lam) == SpectralOperator.unit(),
                "constant 1 did not integrate to Id")
        # additivity/multiplicativity over single-value pieces
        values = list(spec.nonzero)
        for v in values:
            e = sigma_measure(SigmaClopen.of([v]), lam)
            s.check(e.operator * e.operator == e.operator,
                    f"class projection at {v} not idempotent")
        if len(values) >= 2:
            a = SigmaClopen.of(values[:1])
            b = SigmaClopen.of(values[1:2])
            ab = SigmaClopen.of(values[:2])
            s.check(sigma_measure(ab, lam).operator
                    == sigma_measure(a, lam).operator
                    + sigma_measure(b, lam).operator,
                    "sigma measure not additive")
            s.check((sigma_measure(a, lam).operator
                     * sigma_measure(b, lam).operator)
                    == SpectralOperator.zero(),
                    "disjoint pieces not orthogonal")
        # isometry: norm of the integral is the sup of the table
        table = ValueTable.from_mapping(
            random_scalar(rng),
            {v: random_scalar(rng) for v in values})
        got = op_norm(sigma_integrate(table, lam))
        want = min_valuation([table.at_zero]
                             + [fv for _, fv in table.values])
        s.check(got.val == want,
                f"integral norm differs from sup|f| at lam={lam}")
    return s.result()


def _suite_hs_orthonormal_projections(rng, extras):
    s = _Suite("class projections are trace-orthonormal")
    lam = Vector.of([Scalar.t(), Scalar.t(), Scalar.t(2)])
    spec = spectrum_of(lam)
    n = lam.max_index + 1
    mats = [to_matrix(sigma_measure(SigmaClopen.of([v]), lam).operator, n)
            for v in spec.nonzero]
    for i, a in enumerate(mats):
        s.check(hs_inner(a, a).valuation() == 0,
                f"projection {i + 1} does not have unit trace norm")
        for j in range(i + 1, len(mats)):
            s.check(hs_inner(a, mats[j]).is_zero,
                    f"projections {i + 1},{j + 1} not trace-orthogonal")
    return s.result()


def _suite_eigendecompose(rng, extras):
    s = _Suite("symmetric rational matrices decompose and roundtrip")
    for _ in range(8):
        n = rng.randint(2, 4)
        diag = [random_rational(rng) for _ in range(n)]
        # conjugate by an exactly orthogonalized rational basis
        while True:
            raw = [Vector.of_rationals([random_rational(rng)
                                        for _ in range(n)])
                   for _ in range(n)]
            try:
                fam = gram_schmidt(raw)
                break
            except DependentInput:
                continue
        h = SpectralOperator(Scalar.zero(),
                             Vector.of([Scalar.rational(d) for d in diag]),
                             fam)
        matrix = to_matrix(h, n)
        s.check(adjoint(matrix) == matrix, "built matrix not symmetric")
        back = eigendecompose(matrix)
        s.check(to_matrix(back, n) == matrix,
                f"roundtrip failed for diag={diag}")
        if not all(d == 0 for d in diag):
            s.check(operator_norm(matrix) == op_norm(back),
                    "matrix norm differs from sup of eigenvalues")
    return s.result()


CATALOGUE = [
    _suite_scalar_ultrametric,
    _suite_scalar_inversion,
    _suite_sum_of_squares,
    _suite_vector_norm,
    _suite_cauchy_schwarz,
    _suite_gram_schmidt,
    _suite_projection,
    _suite_matrix_norm,
    _suite_adjoint,
    _suite_hs_inner,
    _suite_class_certificates,
    _suite_unitization,
    _suite_isometry,
    _suite_power,
    _suite_gelfand,
    _suite_measure_laws,
    _suite_shrinking,
    _suite_integration,
    _suite_scalar_measures,
    _suite_matrix_rep,
    _suite_resolvent,
    _suite_idempotents,
    _suite_membership,
    _suite_sigma,
    _suite_hs_orthonormal_projections,
    _suite_eigendecompose,
]


def run_catalogue(seed: int = DEFAULT_SEED,
                  extras: Extras | None = None) -> list[SuiteResult]:
    """Run every suite with a fresh RNG per suite, deterministically."""
    extras = extras or Extras()
    results = []
    for idx, suite in enumerate(CATALOGUE):
        rng = random.Random((seed, idx))
        results.append(suite(rng, extras))
    return results
