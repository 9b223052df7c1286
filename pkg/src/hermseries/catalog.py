"""The identity catalog.

Every record pairs two independently built sides.  For the Hermite-series
records the right-hand side uses the closed-form coefficients stated for the
identity, never the binomial transform of the left-hand coefficients, so a
pass is a genuine check.

Several records bundle a family of instances into one comparison by tagging
instance i with a marker monomial (``p**i``, sometimes ``y**r`` as well).
Distinct marker monomials never interact, so the bundled equality holds iff
every instance holds.
"""
from __future__ import annotations

from math import comb, factorial

from .mpoly import P, X, Y, Z, ZERO_POLY, MPoly
from .polynomials import (
    exp_poly,
    exp_t,
    geom_poly,
    hermite,
    hermite_at,
    hermite_series,
    laguerre,
    poly_as_series,
    r_exp_poly_closed,
    r_exp_poly_series,
    r_geom_poly_closed,
    r_geom_poly_series,
    series_to_poly,
)
from .rational import Q
from .registry import HermiteForm, IdentityRecord, Registry
from .sequences import (
    bell,
    binom_symbolic,
    falling_factorial,
    fibonacci,
    fubini,
    harmonic,
    harmonic2,
    lucas,
    r_stirling2,
    stirling2,
    stirling_function,
)
from .series import (
    TSeries,
    central_binomial_sqrt,
    euler_operator,
    euler_operator_by_stirling,
    exp_of_polynomial,
    geometric,
    series_compose,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    shift_div_t,
)
from .transforms import (
    hermite_gf,
    hermite_transformed_series,
    hermite_weighted_series,
    euler_transform,
)

BIBLIOGRAPHY = {
    "(1)": "Hermite generating function",
    "(12)": "Hermite series with 1/(n+1)! weights",
    "(13)": "binomial transform of 1/(k+1)",
    "(14)": "generating function -log(1-t)/t",
    "(15)": "invariance of -log(1-t)/t under the Euler map",
    "(17)": "harmonic numbers as a binomial transform",
    "(18)": "Euler transform of -log(1-t)",
    "(19)": "Hermite series weighted by 1/n",
    "(20)": "Hermite series weighted by harmonic numbers",
    "(21)": "inverse transform of harmonic numbers",
    "(22)": "Hermite series weighted by h_n/(n+1)",
    "(23)": "binomial transform of h_k/(k+1)",
    "(24)": "generating function of h_k/(k+1)",
    "(25)": "anti-invariance of log^2(1-t)/(2t)",
    "(27)": "square harmonic numbers as a binomial transform",
    "(28)": "generating function of h_k/k",
    "(28)-(30)": "Landen identity for the dilogarithm",
    "(30)": "Euler transform of the h_k/k generating function",
    "(31)": "Hermite series with harmonic and square harmonic numbers",
    "(33)": "Laguerre generating function",
    "(34)": "Hermite-Laguerre bilinear series",
    "(35)": "Hermite-Laguerre bilinear series, inverted",
    "(36)": "Hermite addition formula",
    "(37)": "Hermite addition formula as a binomial transform",
    "(39)": "bilinear Hermite series with a free parameter",
    "(40)": "Mehler formula",
    "(41)": "Mehler formula with a free parameter",
    "(42)": "Vandermonde-type binomial transform",
    "(43)": "negative binomial series",
    "(44)": "Euler transform of the negative binomial series",
    "(45)": "Hermite series with binomial coefficients",
    "(46)": "finite right-hand side for integer p",
    "(47)": "binomial sum of Stirling numbers",
    "(48)": "inverse binomial sum of Stirling numbers",
    "(49)": "signed inverse binomial sum of Stirling numbers",
    "(50)": "Hermite series with Stirling numbers",
    "(52)": "Stirling functions as binomial transform",
    "(53)": "Hermite series with k^alpha",
    "(54)": "Hermite series with k^m, closed form",
    "(55)": "exponential number recurrence",
    "(56)": "inverse exponential number recurrence",
    "(57)": "signed inverse exponential number recurrence",
    "(58)": "Hermite series with exponential numbers",
    "(59)": "geometric number recurrence",
    "(60)": "inverse geometric number recurrence",
    "(61)": "signed inverse geometric number recurrence",
    "(62)": "Hermite series with geometric numbers",
    "(63)": "Fibonacci generating function",
    "(64)": "Euler transform of the Fibonacci generating function",
    "(65)": "generating function of F_2n",
    "(66)": "F_2n as binomial sum",
    "(67)": "inverse of the F_2n binomial sum",
    "(68)": "signed inverse of the F_2n binomial sum",
    "(69)": "Hermite series with F_2n",
    "(70)": "alternating Fibonacci generating function",
    "(71)": "Euler transform of the alternating Fibonacci generating function",
    "(72)": "Fibonacci binomial transform",
    "(73)": "Hermite series with Fibonacci numbers",
    "(74)": "Hermite series with alternating Fibonacci numbers",
    "(75)": "Lucas generating function",
    "(76)": "invariance of the Lucas generating function",
    "(77)": "Lucas binomial transform",
    "(78)": "Hermite series with Lucas numbers",
    "(79)": "alternating Lucas generating function",
    "(80)": "Euler transform of the alternating Lucas generating function",
    "(81)": "generating function of L_2n",
    "(82)": "L_2n as binomial sum",
    "(83)": "inverse of the L_2n binomial sum",
    "(84)": "signed inverse of the L_2n binomial sum",
    "(85)": "Hermite series with L_2n",
    "(86)": "Hermite series with alternating Lucas numbers",
    "(88)": "Hermite series with a polynomial weight",
    "(89+)": "Hermite series with r-Stirling numbers",
    "(90)": "Hermite series with a polynomial weight, r-Stirling form",
    "(93)": "powers via falling factorials",
    "(95)": "Euler operator on e^t",
    "(96)": "Euler operator on 1/(1-t)",
    "(55),(95)": "exponential numbers from exponential polynomials",
    "(59),(96)": "geometric numbers from geometric polynomials",
    "(99)": "r-Stirling falling-factorial identity",
    "(102)": "Euler operator on t^r e^t",
    "(105)": "Euler operator on t^r/(1-t)^(r+1)",
    "(dd)": "Euler operator expansion via Stirling numbers",
}


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


def _fact(n: int) -> int:
    return factorial(n)


# ---------------------------------------------------------------------------
# record helpers


def _hermite_record(ident, eq, description, a, c, symbols="x", rhs_weight=None,
                    lhs_offset=0, notes=""):
    def lhs(order):
        s = hermite_weighted_series(a, order)
        return s - lhs_offset if lhs_offset else s

    def rhs(order):
        return hermite_transformed_series(c, order, rhs_weight)

    return IdentityRecord(
        ident, eq, "series", lhs, rhs, frozenset(symbols), description, notes,
        hermite_form=HermiteForm(a, c, rhs_weight, lhs_offset),
    )


def _finite_record(ident, eq, description, left, right, start=0, symbols="", notes=""):
    def build(fn):
        def builder(order):
            return TSeries([fn(n) if n >= start else ZERO_POLY for n in range(order + 1)], order)
        return builder

    return IdentityRecord(ident, eq, "finite-sum", build(left), build(right),
                          frozenset(symbols), description, notes)


def _binom_sum(n, term, signed=False, reverse_sign=False):
    """sum_k C(n,k) s_k term(k) with s_k = (-1)^k, (-1)^(n-k) or 1."""
    total = ZERO_POLY
    for k in range(n + 1):
        c = comb(n, k)
        if signed:
            c *= _sgn(k)
        if reverse_sign:
            c *= _sgn(n - k)
        v = term(k)
        if v:
            total = total + (v * c if isinstance(v, MPoly) else MPoly.const(Q(v) * c))
    return total


def _one_minus(order, *coeffs):
    """1 + coeffs[0] t + coeffs[1] t^2 + ... as a polynomial series."""
    return TSeries.polynomial([1, *coeffs], order)


def _rational(order, num, den):
    """num(t)/den(t) for coefficient lists."""
    return series_mul(TSeries.polynomial(num, order), series_inverse(TSeries.polynomial(den, order)))


def _seq_series(order, fn):
    return TSeries.from_function(fn, order)


def _neg_log_1mt(order):
    return -series_log(TSeries.polynomial([1, -1], order))


def _li2(order):
    return TSeries([0] + [Q(1, k * k) for k in range(1, order + 1)], order)


def _minus_t_over_1mt(order):
    return geometric(order).mul_t(1).scale(-1)


def _t_over_1mt(order):
    return geometric(order).mul_t(1)


def _divided_by_t(builder):
    """builder(order + 1) / t, truncated back to ``order`` so no reliable
    coefficient is lost."""
    def build(order):
        return shift_div_t(builder(order + 1), 1).truncate(order)
    return build


def _marker_sum(order, instances):
    """sum over (marker, series) pairs of marker * series."""
    total = TSeries.zero(order)
    for marker, s in instances:
        total = total + s.scale(marker)
    return total


# ---------------------------------------------------------------------------
# Hermite-series records


def _hermite_series_records():
    recs = []

    def eq1_lhs(order):
        return hermite_gf(order)

    def eq1_rhs(order):
        return TSeries([hermite(n).scale(Q(1, _fact(n))) for n in range(order + 1)], order)

    recs.append(IdentityRecord("EQ1", "(1)", "series", eq1_lhs, eq1_rhs, frozenset("x"),
                               "exp(2xt - t^2) against the Hermite recurrence"))

    recs.append(_hermite_record(
        "EQ12", "(12)", "1/(n+1) weights are reproduced on the right",
        lambda n: Q(1, n + 1), lambda n: Q(_sgn(n), n + 1)))
    recs.append(_hermite_record(
        "EQ19", "(19)", "1/n weights pair with harmonic numbers",
        lambda n: Q(1, n) if n else 0, lambda n: -_sgn(n) * harmonic(n)))
    recs.append(_hermite_record(
        "EQ20", "(20)", "harmonic weights pair with 1/n",
        lambda n: harmonic(n), lambda n: Q(-_sgn(n), n) if n else 0))
    recs.append(_hermite_record(
        "EQ22", "(22)", "h_n/(n+1) weights",
        lambda n: harmonic(n) / (n + 1), lambda n: -_sgn(n) * harmonic(n) / (n + 1),
        notes="right-hand coefficients taken from the binomial identity for h_k/(k+1); "
              "the uncorrected right side lacks the h_n factor and has the opposite sign"))
    recs.append(_hermite_record(
        "EQ31", "(31)", "h_n/n weights pair with square harmonic numbers",
        lambda n: harmonic(n) / n if n else 0, lambda n: -_sgn(n) * harmonic2(n)))
    recs.append(_hermite_record(
        "EQ31-SYM", "(31)", "square harmonic weights pair with h_n/n",
        lambda n: harmonic2(n), lambda n: -_sgn(n) * harmonic(n) / n if n else 0,
        notes="derived companion of the h_n/n record, obtained by inverting its weights"))
    recs.append(_hermite_record(
        "EQ34", "(34)", "z^n/n! weights pair with Laguerre polynomials",
        lambda n: (Z ** n).scale(Q(1, _fact(n))), lambda n: laguerre(n).scale(_sgn(n)),
        symbols="xz"))
    recs.append(_hermite_record(
        "EQ35", "(35)", "Laguerre weights pair with z^n/n!",
        lambda n: laguerre(n), lambda n: (Z ** n).scale(Q(_sgn(n), _fact(n))),
        symbols="xz"))
    recs.append(_hermite_record(
        "EQ45", "(45)", "C(p+n, n) weights pair with C(p, n), p symbolic",
        lambda n: binom_symbolic(P + n, n), lambda n: binom_symbolic(P, n), symbols="xp"))

    def eq46_a(n):
        return sum((P ** q * comb(q + n, n) for q in EQ46_P_VALUES), ZERO_POLY)

    def eq46_c(n):
        return sum((P ** q * comb(q, n) for q in EQ46_P_VALUES if n <= q), ZERO_POLY)

    recs.append(_hermite_record(
        "EQ46", "(46)", "integer p: the right side is a finite sum",
        eq46_a, eq46_c, symbols="xp",
        notes="instances p = 1..4, each tagged by the marker p**p"))

    recs.append(_hermite_record(
        "EQ50", "(50)", "Stirling numbers S(n+1, 3) pair with S(n, 2)",
        lambda n: stirling2(n + 1, EQ50_M + 1), lambda n: stirling2(n, EQ50_M)))

    def power_weights(exponents):
        return lambda n: sum((P ** e * n ** e for e in exponents), ZERO_POLY)

    recs.append(_hermite_record(
        "EQ53", "(53)", "k^alpha weights, Stirling functions from the alternating sum",
        power_weights(EQ53_ALPHAS),
        lambda n: sum((P ** a * stirling_function(a, n) for a in EQ53_ALPHAS), ZERO_POLY),
        symbols="xp", rhs_weight=lambda n: 1,
        notes="integer alpha = 1..4 only (marker p**alpha); real alpha lives in numeric checks"))
    recs.append(_hermite_record(
        "EQ54", "(54)", "k^m weights, closed form with Stirling numbers",
        power_weights(EQ54_MS),
        lambda n: sum((P ** m * stirling2(m, n) for m in EQ54_MS), ZERO_POLY),
        symbols="xp", rhs_weight=lambda n: 1,
        notes="m = 1..5 tagged by marker p**m"))
    recs.append(_hermite_record(
        "EQ58", "(58)", "shifted exponential numbers",
        lambda n: bell(n + 1), lambda n: bell(n)))
    recs.append(_hermite_record(
        "EQ62", "(62)", "doubled geometric numbers",
        lambda n: 2 * fubini(n), lambda n: fubini(n), lhs_offset=1,
        notes="the geometric recurrence fails at n = 0, so the two uncorrected sides differ by "
              "exactly 1; the left side here is reduced by 1"))
    recs.append(_hermite_record(
        "EQ69", "(69)", "F_2n pairs with F_n",
        lambda n: fibonacci(2 * n), lambda n: fibonacci(n)))
    recs.append(_hermite_record(
        "EQ73", "(73)", "Fibonacci weights",
        lambda n: fibonacci(n), lambda n: -_sgn(n) * fibonacci(n)))
    recs.append(_hermite_record(
        "EQ74", "(74)", "alternating Fibonacci weights pair with F_2n",
        lambda n: _sgn(n) * fibonacci(n), lambda n: _sgn(n) * fibonacci(2 * n)))
    recs.append(_hermite_record(
        "EQ78", "(78)", "Lucas weights",
        lambda n: lucas(n), lambda n: _sgn(n) * lucas(n)))
    recs.append(_hermite_record(
        "EQ85", "(85)", "L_2n pairs with L_n",
        lambda n: lucas(2 * n), lambda n: lucas(n)))
    recs.append(_hermite_record(
        "EQ86", "(86)", "alternating Lucas weights pair with L_2n",
        lambda n: _sgn(n) * lucas(n), lambda n: _sgn(n) * lucas(2 * n)))

    p0, p1, p2 = EQ88_POLY

    recs.append(_hermite_record(
        "EQ88", "(88)", "quadratic polynomial weight",
        lambda n: p0 + p1 * n + p2 * n * n,
        lambda k: sum((EQ88_POLY[j] * stirling2(j, k) for j in range(3)), Q(0)),
        rhs_weight=lambda n: 1))

    def eq89_a(n):
        return sum((P ** (i + 1) * (n ** (m - r) * falling_factorial(n, r))
                    for i, (m, r) in enumerate(EQ89_CASES)), ZERO_POLY)

    def eq89_c(k):
        return sum((P ** (i + 1) * r_stirling2(m, k, r) for i, (m, r) in enumerate(EQ89_CASES)),
                   ZERO_POLY)

    recs.append(_hermite_record(
        "EQ89+", "(89+)", "n^(m-r) t^n/(n-r)! weights with r-Stirling numbers",
        eq89_a, eq89_c, symbols="xp", rhs_weight=lambda n: 1,
        notes="(m, r) in " + ", ".join(map(str, EQ89_CASES)) + " tagged by p**(i+1)"))

    q2, q3 = EQ90_POLY

    recs.append(_hermite_record(
        "EQ90", "(90)", "cubic polynomial weight, r = 2",
        lambda n: falling_factorial(n, 2) * (q3 * n + q2),
        lambda k: q2 * r_stirling2(2, k, 2) + q3 * r_stirling2(3, k, 2),
        rhs_weight=lambda n: 1))

    recs.extend(_bilinear_records())
    return recs


EQ46_P_VALUES = (1, 2, 3, 4)
EQ50_M = 2
EQ53_ALPHAS = (1, 2, 3, 4)
EQ54_MS = (1, 2, 3, 4, 5)
EQ88_POLY = (Q(3), Q(-1, 2), Q(2))          # p0 + p1 n + p2 n^2
EQ89_CASES = ((3, 1), (4, 2), (5, 3))       # (m, r)
EQ90_POLY = (Q(-5), Q(3, 2))                # p2, p3
FALLING_MARKERS = 13                        # m = 0..12 reaches every Stirling entry up to order 12


def eq46_rhs_terms(p: int) -> list[int]:
    """Nonzero Hermite-term coefficients C(p, n) on the finite right side."""
    return [comb(p, n) for n in range(p + 1) if comb(p, n)]


def bilinear_series(order: int) -> TSeries:
    """sum H_n(x) H_n(z) t^n / n!."""
    return TSeries(
        [(hermite(n) * hermite_at(n, Z)).scale(Q(1, _fact(n))) for n in range(order + 1)], order)


def mehler_closed_form(order: int) -> TSeries:
    """(1 - 4t^2)^(-1/2) exp(x^2 - (x - 2zt)^2 / (1 - 4t^2))."""
    square = TSeries.polynomial([X * X, X * Z * -4, Z * Z * 4], order)
    inv = series_inverse(TSeries.polynomial([1, 0, -4], order))
    exponent = -series_mul(square, inv) + X * X
    return series_mul(central_binomial_sqrt(order), series_exp(exponent))


def free_parameter_bilinear(order: int) -> TSeries:
    """exp(4xyt - 4y^2 t^2) sum H_n(x - 2yt) H_n(z - y) t^n / n!."""
    total = [ZERO_POLY] * (order + 1)
    step = Y * -2
    for n in range(order + 1):
        hz = hermite_at(n, Z - Y).scale(Q(1, _fact(n)))
        hx = hermite_series(n, order - n, X, step)
        for j, c in enumerate(hx.coeffs):
            if c:
                total[n + j] = total[n + j] + c * hz
    prefactor = exp_of_polynomial([0, X * Y * 4, Y * Y * -4], order)
    return series_mul(prefactor, TSeries(total, order))


def _bilinear_records():
    return [
        IdentityRecord("EQ39", "(39)", "series", bilinear_series, free_parameter_bilinear,
                       frozenset("xyz"), "y appears only on the right"),
        IdentityRecord("EQ40-MEHLER", "(40)", "series", bilinear_series, mehler_closed_form,
                       frozenset("xz"), "bilinear Hermite series against its closed form"),
        IdentityRecord("EQ41", "(41)", "series",
                       lambda order: mehler_closed_form(order),
                       lambda order: free_parameter_bilinear(order),
                       frozenset("xyz"), "closed form against the free-parameter expansion"),
    ]


# ---------------------------------------------------------------------------
# generating-function records


def _gf_records():
    def rec(ident, eq, description, lhs, rhs, symbols="", notes=""):
        return IdentityRecord(ident, eq, "gf", lhs, rhs, frozenset(symbols), description, notes)

    f14 = _divided_by_t(_neg_log_1mt)

    def f24(order):
        return _divided_by_t(lambda m: series_log(TSeries.polynomial([1, -1], m)) ** 2 / 2)(order)

    def h_over_k(order):
        return _seq_series(order, lambda k: harmonic(k) / k if k else 0)

    def landen_lhs(order):
        return _li2(order) + series_log(TSeries.polynomial([1, -1], order)) ** 2 / 2

    def fib(order):
        return _rational(order, [0, 1], [1, -1, -1])

    def fib_bar(order):
        return _rational(order, [0, -1], [1, 1, -1])

    def luc(order):
        return _rational(order, [2, -1], [1, -1, -1])

    def luc_bar(order):
        return _rational(order, [2, 1], [1, 1, -1])

    def neg_binomial(order):
        return _seq_series(order, lambda k: binom_symbolic(P + k, k))

    return [
        rec("EQ14", "(14)", "-log(1-t)/t has coefficients 1/(k+1)",
            f14, lambda o: _seq_series(o, lambda k: Q(1, k + 1))),
        rec("EQ15", "(15)", "-log(1-t)/t is fixed by the Euler map with mu = -1",
            lambda o: euler_transform(f14(o), 1, -1), f14),
        rec("EQ18", "(18)", "Euler map of -log(1-t) gives minus the harmonic generating function",
            lambda o: euler_transform(_neg_log_1mt(o), 1, -1),
            lambda o: _seq_series(o, lambda n: -harmonic(n))),
        rec("EQ24", "(24)", "log^2(1-t)/(2t) has coefficients h_k/(k+1)",
            f24, lambda o: _seq_series(o, lambda k: harmonic(k) / (k + 1))),
        rec("EQ25", "(25)", "log^2(1-t)/(2t) changes sign under the Euler map",
            lambda o: euler_transform(f24(o), 1, -1), lambda o: -f24(o)),
        rec("EQ28", "(28)", "Li2(t) + log^2(1-t)/2 generates h_k/k", landen_lhs, h_over_k),
        rec("EQ29-LANDEN", "(28)-(30)", "Landen identity",
            landen_lhs, lambda o: -series_compose(_li2(o), _minus_t_over_1mt(o))),
        rec("EQ30", "(30)", "-Li2(t)/(1-t) generates minus the square harmonic numbers",
            lambda o: -series_mul(_li2(o), geometric(o)),
            lambda o: _seq_series(o, lambda n: -harmonic2(n))),
        rec("EQ30-EULER", "(30)", "Euler map of the h_k/k generating function",
            lambda o: euler_transform(h_over_k(o), 1, -1),
            lambda o: -series_mul(_li2(o), geometric(o))),
        rec("EQ33", "(33)", "Laguerre generating function",
            lambda o: series_mul(geometric(o), series_exp(_t_over_1mt(o).scale(-Z))),
            lambda o: _seq_series(o, laguerre), symbols="z"),
        rec("EQ43", "(43)", "(1-t)^(-p-1) has coefficients C(p+k, k)",
            lambda o: series_exp(series_log(TSeries.polynomial([1, -1], o)).scale(-P - 1)),
            neg_binomial, symbols="p"),
        rec("EQ44", "(44)", "Euler map of (1-t)^(-p-1) is (1-t)^p",
            lambda o: euler_transform(neg_binomial(o), 1, -1),
            lambda o: _seq_series(o, lambda n: binom_symbolic(P, n).scale(_sgn(n))), symbols="p"),
        rec("EQ63", "(63)", "Fibonacci generating function",
            fib, lambda o: _seq_series(o, fibonacci)),
        rec("EQ64", "(64)", "Euler map (mu = 1) of the Fibonacci generating function",
            lambda o: euler_transform(fib(o), 1, 1), lambda o: _rational(o, [0, 1], [1, -3, 1])),
        rec("EQ65", "(65)", "t/(1-3t+t^2) generates F_2n",
            lambda o: _rational(o, [0, 1], [1, -3, 1]), lambda o: _seq_series(o, lambda n: fibonacci(2 * n))),
        rec("EQ70", "(70)", "alternating Fibonacci generating function",
            fib_bar, lambda o: _seq_series(o, lambda n: _sgn(n) * fibonacci(n))),
        rec("EQ71", "(71)", "Euler map (mu = 1) of the alternating Fibonacci generating function",
            lambda o: euler_transform(fib_bar(o), 1, 1), lambda o: -fib(o)),
        rec("EQ75", "(75)", "Lucas generating function",
            luc, lambda o: _seq_series(o, lucas)),
        rec("EQ76", "(76)", "the Lucas generating function is fixed by the Euler map",
            lambda o: euler_transform(luc(o), 1, -1), luc),
        rec("EQ79", "(79)", "alternating Lucas generating function",
            luc_bar, lambda o: _seq_series(o, lambda n: _sgn(n) * lucas(n))),
        rec("EQ80", "(80)", "Euler map of the alternating Lucas generating function",
            lambda o: euler_transform(luc_bar(o), 1, -1), lambda o: _rational(o, [2, -3], [1, -3, 1])),
        rec("EQ81", "(81)", "(2-3t)/(1-3t+t^2) generates L_2n",
            lambda o: _rational(o, [2, -3], [1, -3, 1]), lambda o: _seq_series(o, lambda n: lucas(2 * n))),
    ]


# ---------------------------------------------------------------------------
# finite binomial sums


def _finite_records():
    h, h2, F, L = harmonic, harmonic2, fibonacci, lucas
    S = stirling2
    rec = _finite_record

    def marker_sum(values):
        return sum((P ** i * v for i, v in values), ZERO_POLY)

    def geo_shift(k):
        # 2 w_k with the k = 0 term corrected: the recurrence only holds for n >= 1
        return 2 * fubini(k) - (1 if k == 0 else 0)

    return [
        rec("EQ13", "(13)", "1/(k+1) is a fixed point of the binomial transform",
            lambda n: _binom_sum(n, lambda k: Q(1, k + 1), signed=True), lambda n: Q(1, n + 1)),
        rec("EQ17", "(17)", "harmonic numbers from 1/k",
            lambda n: _binom_sum(n, lambda k: Q(1, k) if k else 0, signed=True), lambda n: -h(n)),
        rec("EQ21", "(21)", "inverse: 1/n from harmonic numbers",
            lambda n: _binom_sum(n, h, signed=True), lambda n: Q(-1, n), start=1),
        rec("EQ23", "(23)", "h_k/(k+1) maps to -h_n/(n+1)",
            lambda n: _binom_sum(n, lambda k: h(k) / (k + 1), signed=True), lambda n: -h(n) / (n + 1)),
        rec("EQ27", "(27)", "square harmonic numbers from h_k/k",
            lambda n: _binom_sum(n, lambda k: h(k) / k if k else 0, signed=True), lambda n: -h2(n)),
        rec("EQ36", "(36)", "Hermite addition formula, symbolic in y and z",
            lambda n: hermite_at(n, Z + Y),
            lambda n: sum(((Y * 2) ** (n - k) * hermite_at(k, Z) * comb(n, k) for k in range(n + 1)), ZERO_POLY),
            symbols="yz"),
        rec("EQ37", "(37)", "addition formula as a transform, multiplied through by (2y)^n",
            lambda n: hermite_at(n, Z - Y).scale(_sgn(n)),
            lambda n: _binom_sum(n, lambda k: hermite_at(k, Z) * (Y * 2) ** (n - k), signed=True),
            symbols="yz", notes="denominators (2y)^k cleared by multiplying both sides by (2y)^n"),
        rec("EQ42", "(42)", "C(p+k, k) maps to (-1)^n C(p, n), p symbolic",
            lambda n: _binom_sum(n, lambda k: binom_symbolic(P + k, k), signed=True),
            lambda n: binom_symbolic(P, n).scale(_sgn(n)), symbols="p"),
        rec("EQ47", "(47)", "sum C(n,k) S(k,m) = S(n+1, m+1), m = 0..5 tagged p**m",
            lambda n: marker_sum((m, _binom_sum(n, lambda k: S(k, m))) for m in range(6)),
            lambda n: marker_sum((m, S(n + 1, m + 1)) for m in range(6)), symbols="p"),
        rec("EQ48", "(48)", "inverse of the Stirling binomial sum",
            lambda n: marker_sum((m, _binom_sum(n, lambda k: S(k + 1, m + 1), reverse_sign=True)) for m in range(6)),
            lambda n: marker_sum((m, S(n, m)) for m in range(6)), symbols="p"),
        rec("EQ49", "(49)", "signed inverse of the Stirling binomial sum",
            lambda n: marker_sum((m, _binom_sum(n, lambda k: S(k + 1, m + 1), signed=True)) for m in range(6)),
            lambda n: marker_sum((m, _sgn(n) * S(n, m)) for m in range(6)), symbols="p"),
        rec("EQ52", "(52)", "integer alpha = 1..6: alternating power sums give n! S(alpha, n)",
            lambda n: marker_sum((a, _sgn(n) * _fact(n) * S(a, n)) for a in range(1, 7)),
            lambda n: marker_sum((a, _binom_sum(n, lambda k: k ** a, signed=True)) for a in range(1, 7)),
            symbols="p"),
        rec("EQ55", "(55)", "exponential number recurrence",
            lambda n: bell(n + 1), lambda n: _binom_sum(n, bell)),
        rec("EQ56", "(56)", "inverse exponential number recurrence",
            lambda n: bell(n), lambda n: _binom_sum(n, lambda k: bell(k + 1), reverse_sign=True)),
        rec("EQ57", "(57)", "signed inverse exponential number recurrence",
            lambda n: _sgn(n) * bell(n), lambda n: _binom_sum(n, lambda k: bell(k + 1), signed=True)),
        rec("EQ59", "(59)", "geometric number recurrence (n >= 1)",
            lambda n: 2 * fubini(n), lambda n: _binom_sum(n, fubini), start=1,
            notes="fails at n = 0 for any nonzero seed; checked for n >= 1"),
        rec("EQ60", "(60)", "inverse geometric recurrence, k = 0 term corrected",
            lambda n: fubini(n), lambda n: _binom_sum(n, geo_shift, reverse_sign=True),
            notes="uses 2 w_k - [k = 0]: the uncorrected form is off by (-1)^n for every n"),
        rec("EQ61", "(61)", "signed inverse geometric recurrence, k = 0 term corrected",
            lambda n: _sgn(n) * fubini(n), lambda n: _binom_sum(n, geo_shift, signed=True),
            notes="uses 2 w_k - [k = 0]: the uncorrected form is off by 1 for every n"),
        rec("EQ66", "(66)", "F_2n as a binomial sum",
            lambda n: F(2 * n), lambda n: _binom_sum(n, F)),
        rec("EQ67", "(67)", "F_n from F_2k",
            lambda n: F(n), lambda n: _binom_sum(n, lambda k: F(2 * k), reverse_sign=True)),
        rec("EQ68", "(68)", "signed F_n from F_2k",
            lambda n: _sgn(n) * F(n), lambda n: _binom_sum(n, lambda k: F(2 * k), signed=True)),
        rec("EQ72", "(72)", "Fibonacci binomial transform",
            lambda n: -F(n), lambda n: _binom_sum(n, F, signed=True)),
        rec("EQ77", "(77)", "Lucas numbers are fixed by the binomial transform",
            lambda n: L(n), lambda n: _binom_sum(n, L, signed=True)),
        rec("EQ82", "(82)", "L_2n as a binomial sum",
            lambda n: L(2 * n), lambda n: _binom_sum(n, L)),
        rec("EQ83", "(83)", "L_n from L_2k",
            lambda n: L(n), lambda n: _binom_sum(n, lambda k: L(2 * k), reverse_sign=True)),
        rec("EQ84", "(84)", "signed L_n from L_2k",
            lambda n: _sgn(n) * L(n), lambda n: _binom_sum(n, lambda k: L(2 * k), signed=True)),
        rec("EQ93", "(93)", "m^n through falling factorials, m = 0..12 tagged p**m",
            lambda n: marker_sum((m, m ** n) for m in range(FALLING_MARKERS)),
            lambda n: marker_sum((m, sum(S(n, k) * falling_factorial(m, k) for k in range(n + 1)))
                                 for m in range(FALLING_MARKERS)),
            symbols="p",
            notes="coefficient-level form of the exp(2mx - m^2) expansion"),
        rec("EQ99", "(99)", "(m)_r m^(n-r) through r-Stirling numbers, tagged y**r p**m",
            lambda n: sum((Y ** r * P ** m * (falling_factorial(m, r) * m ** (n - r))
                           for r in range(4) if n >= r for m in range(FALLING_MARKERS)), ZERO_POLY),
            lambda n: sum((Y ** r * P ** m * sum(r_stirling2(n, k, r) * falling_factorial(m, k)
                                                  for k in range(n + 1))
                           for r in range(4) if n >= r for m in range(FALLING_MARKERS)), ZERO_POLY),
            symbols="yp"),
        rec("EQ95-NUMBERS", "(55),(95)", "exponential numbers equal the exponential polynomials at 1",
            lambda n: bell(n),
            lambda n: _poly_at_one(series_to_poly(r_exp_poly_series(n, 0, n + 2), "x", n)),
            notes="the polynomial side comes from the Euler-operator identity, not from Stirling numbers"),
        rec("EQ96-NUMBERS", "(59),(96)", "geometric numbers equal the geometric polynomials at 1",
            lambda n: fubini(n), lambda n: _geom_poly_operator_at_one(n)),
    ]


def _poly_at_one(poly: MPoly):
    return poly.subs("x", 1)


def _geom_poly_operator_at_one(n: int):
    # (t d/dt)^n 1/(1-t) = w_n(t/(1-t))/(1-t); substitute t = u/(1+u)
    order = n + 2
    s = r_geom_poly_series(n, 0, order)
    in_u = series_compose(s, geometric(order, -1).mul_t(1))
    return _poly_at_one(series_to_poly(in_u, "x", n))


# ---------------------------------------------------------------------------
# operator records


def _operator_records():
    def rec(ident, eq, description, lhs, rhs, symbols="p", notes=""):
        return IdentityRecord(ident, eq, "operator", lhs, rhs, frozenset(symbols), description, notes)

    def powers(order, top):
        return range(min(top, order) + 1)

    def dd_test_function(order):
        return series_mul(exp_t(order), geometric(order, 2)) + TSeries.t(order, 2)

    def eq_dd_lhs(order):
        f = dd_test_function(order)
        return _marker_sum(order, ((P ** n, euler_operator(f, n)) for n in powers(order, 5)))

    def eq_dd_rhs(order):
        f = dd_test_function(order)
        return _marker_sum(order, ((P ** n, euler_operator_by_stirling(f, n)) for n in powers(order, 5)))

    def eq95_lhs(order):
        return _marker_sum(order, ((P ** n, euler_operator(exp_t(order), n)) for n in powers(order, 6)))

    def eq95_rhs(order):
        e = exp_t(order)
        return _marker_sum(order, ((P ** n, series_mul(e, poly_as_series(exp_poly(n), "x", order)))
                                   for n in powers(order, 6)))

    def eq96_lhs(order):
        return _marker_sum(order, ((P ** n, euler_operator(geometric(order), n)) for n in powers(order, 6)))

    def eq96_rhs(order):
        g = geometric(order)
        u = _t_over_1mt(order)
        return _marker_sum(order, ((P ** n, series_mul(g, series_compose(poly_as_series(geom_poly(n), "x", order), u)))
                                   for n in powers(order, 6)))

    def r_cases(order):
        return [(n, r) for r in range(4) for n in range(r, r + 6) if n - r <= order]

    def eq102_lhs(order):
        e = exp_t(order)
        return _marker_sum(order, ((Y ** r * P ** (n - r), euler_operator(e.mul_t(r), n - r))
                                   for n, r in r_cases(order)))

    def eq102_rhs(order):
        e = exp_t(order)
        return _marker_sum(order, ((Y ** r * P ** (n - r),
                                    series_mul(e, poly_as_series(r_exp_poly_closed(n, r), "x", order)))
                                   for n, r in r_cases(order)))

    def eq105_lhs(order):
        g = geometric(order)
        return _marker_sum(order, ((Y ** r * P ** (n - r),
                                    euler_operator((g ** (r + 1)).mul_t(r), n - r).scale(factorial(r)))
                                   for n, r in r_cases(order)))

    def eq105_rhs(order):
        g = geometric(order)
        u = _t_over_1mt(order)
        return _marker_sum(order, ((Y ** r * P ** (n - r),
                                    series_mul(g, series_compose(poly_as_series(r_geom_poly_closed(n, r), "x", order), u)))
                                   for n, r in r_cases(order)))

    return [
        rec("EQ-dd", "(dd)", "(t d/dt)^n against its Stirling expansion, n = 0..5", eq_dd_lhs, eq_dd_rhs),
        rec("EQ95", "(95)", "(t d/dt)^n e^t = e^t phi_n(t), n = 0..6", eq95_lhs, eq95_rhs,
            notes="coefficient-level form of the exp(2mx - m^2) t^m/m! series"),
        rec("EQ96", "(96)", "(t d/dt)^n 1/(1-t) = w_n(t/(1-t))/(1-t), n = 0..6", eq96_lhs, eq96_rhs),
        rec("EQ102", "(102)", "(t d/dt)^(n-r) t^r e^t against the r-Stirling closed form",
            eq102_lhs, eq102_rhs, symbols="yp",
            notes="r = 0..3, n = r..r+5, tagged y**r p**(n-r)"),
        rec("EQ105", "(105)", "r! (t d/dt)^(n-r) t^r/(1-t)^(r+1) against the r-Stirling closed form",
            eq105_lhs, eq105_rhs, symbols="yp",
            notes="r = 0..3, n = r..r+5, tagged y**r p**(n-r)"),
    ]


def register_all() -> Registry:
    registry = Registry(bibliography=BIBLIOGRAPHY)
    for rec in (_hermite_series_records() + _gf_records() + _finite_records() + _operator_records()):
        registry.add(rec)
    return registry
