"""Series transformations built on the exact algebra.

* binomial transform b_n = sum_k C(n,k) (-1)^k a_k (its own inverse),
* Euler transformation f(t) -> f(mu t / (1 - lam t)) / (1 - lam t),
* the Hermite transformation pairing sum a_n H_n(x) t^n/n! with
  exp(2xt - t^2) sum (-1)^n b_n H_n(x - t) t^n/n!, and its generic form
  for an arbitrary g,
* the Stirling and r-Stirling transforms for polynomial f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Sequence

from .errors import ContractViolation, SeriesDomainError
from .mpoly import X, ZERO_POLY, MPoly, as_poly
from .polynomials import hermite, hermite_series
from .rational import Q
from .sequences import falling_factorial, r_stirling2, stirling2
from .series import (
    TSeries,
    exp_of_polynomial,
    geometric,
    series_compose,
    series_derivative,
    series_mul,
)


@dataclass
class CoeffSeq:
    """A pure index -> MPoly function with a cache and a description."""

    provider: Callable[[int], object]
    description: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, k: int) -> MPoly:
        v = self._cache.get(k)
        if v is None:
            v = self._cache[k] = as_poly(self.provider(k))
        return v

    @classmethod
    def of(cls, values: Sequence, description: str = "") -> "CoeffSeq":
        """Finite list, zero-extended."""
        vals = [as_poly(v) for v in values]
        return cls(lambda k: vals[k] if k < len(vals) else ZERO_POLY, description)


def _as_seq(a) -> CoeffSeq:
    if isinstance(a, CoeffSeq):
        return a
    if callable(a):
        return CoeffSeq(a)
    return CoeffSeq.of(a)


# ---------------------------------------------------------------------------
# binomial and Euler transforms


def binomial_transform(a, n: int) -> MPoly:
    """b_n = sum_{k=0}^n C(n,k) (-1)^k a_k."""
    if n < 0:
        raise ContractViolation("index must be nonnegative")
    a = _as_seq(a)
    out = ZERO_POLY
    for k in range(n + 1):
        ak = a(k)
        if ak:
            out = out + ak.scale(comb(n, k) if k % 2 == 0 else -comb(n, k))
    return out


def inverse_binomial_transform(b, n: int) -> MPoly:
    """The inverse transform is the same formula: the map is an involution."""
    return binomial_transform(b, n)


def binomial_transform_list(values: Sequence) -> list[MPoly]:
    seq = CoeffSeq.of(values)
    return [binomial_transform(seq, n) for n in range(len(values))]


def euler_transform(f: TSeries, lam=1, mu=1, check: bool = True) -> TSeries:
    """f(mu t / (1 - lam t)) / (1 - lam t).

    With ``check`` the coefficients are compared against the binomial sums
    sum_k C(n,k) mu^k lam^(n-k) f_k and a ContractViolation is raised on any
    disagreement.
    """
    lam, mu = Q(lam), Q(mu)
    n = f.order
    geo = geometric(n, lam)
    inner = geo.mul_t(1).scale(mu)
    out = series_mul(geo, series_compose(f, inner))
    if check:
        direct = euler_transform_direct(f, lam, mu)
        if not out.agrees_with(direct):
            raise ContractViolation("Euler transform disagrees with its binomial-sum form")
    return out


def euler_transform_direct(f: TSeries, lam=1, mu=1) -> TSeries:
    lam, mu = Q(lam), Q(mu)
    coeffs = []
    for m in range(f.order + 1):
        acc = ZERO_POLY
        for k in range(m + 1):
            if f.coeffs[k]:
                acc = acc + f.coeffs[k].scale(comb(m, k) * mu ** k * lam ** (m - k))
        coeffs.append(acc)
    return TSeries(coeffs, f.order, f.reliable_order)


# ---------------------------------------------------------------------------
# Hermite transformation


def hermite_gf(order: int) -> TSeries:
    """exp(2xt - t^2)."""
    return exp_of_polynomial([0, X.scale(2), -1], order)


def hermite_weighted_series(a, order: int) -> TSeries:
    """sum_n a_n H_n(x) t^n / n!."""
    a = _as_seq(a)
    coeffs = []
    for k in range(order + 1):
        ak = a(k)
        coeffs.append((hermite(k) * ak).scale(Q(1, factorial(k))) if ak else ZERO_POLY)
    return TSeries(coeffs, order)


def shifted_hermite_sum(c, order: int, weight: Callable[[int], object] | None = None) -> TSeries:
    """sum_n c_n H_n(x - t) t^n * weight(n)   (weight defaults to 1/n!)."""
    c = _as_seq(c)
    total = [ZERO_POLY] * (order + 1)
    for n in range(order + 1):
        cn = c(n)
        if not cn:
            continue
        w = Q(1, factorial(n)) if weight is None else Q(weight(n))
        if not w:
            continue
        factor = cn.scale(w)
        h = hermite_series(n, order - n)
        for j, hc in enumerate(h.coeffs):
            if hc:
                total[n + j] = total[n + j] + hc * factor
    return TSeries(total, order)


def hermite_transformed_series(c, order: int, weight=None) -> TSeries:
    """exp(2xt - t^2) * sum_n c_n H_n(x - t) t^n / n!."""
    return series_mul(hermite_gf(order), shifted_hermite_sum(c, order, weight))


def hermite_transform_lhs(a, order: int) -> TSeries:
    return hermite_weighted_series(a, order)


def hermite_transform_rhs(a, order: int) -> TSeries:
    """Right-hand side with b_n computed by direct binomial summation."""
    a = _as_seq(a)
    b = [binomial_transform(a, n) for n in range(order + 1)]
    signed = [bn if n % 2 == 0 else -bn for n, bn in enumerate(b)]
    return hermite_transformed_series(signed, order)


def derivative_transform_rhs(a, g: TSeries) -> TSeries:
    """sum_n (-1)^n g^(n)(t) t^n / n! * b_n for an arbitrary series g.

    With g = exp(2xt - t^2) this is the Hermite transformation; for other g
    it is the underlying coefficient-product identity, whose left side is
    ``sum_n a_n g_n t^n``.
    """
    a = _as_seq(a)
    order = g.order
    total = TSeries.zero(order)
    deriv = g
    for n in range(order + 1):
        bn = binomial_transform(a, n)
        if bn:
            factor = bn.scale(Q((-1) ** n, factorial(n)))
            total = total + deriv.mul_t(n).scale(factor)
        deriv = series_derivative(deriv)
    return total


def derivative_transform_lhs(a, g: TSeries) -> TSeries:
    a = _as_seq(a)
    return TSeries([g.coeffs[k] * a(k) for k in range(g.order + 1)], g.order, g.reliable_order)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Mismatch:
    power: int
    lhs: MPoly
    rhs: MPoly


@dataclass(frozen=True)
class TransformReport:
    lhs: TSeries
    rhs: TSeries
    compared_order: int
    equal: bool
    first_mismatch: Mismatch | None = None


def compare(lhs: TSeries, rhs: TSeries) -> TransformReport:
    k = lhs.first_difference(rhs)
    compared = lhs.compared_order(rhs)
    if k is None:
        return TransformReport(lhs, rhs, compared, True, None)
    return TransformReport(lhs, rhs, compared, False, Mismatch(k, lhs.coeffs[k], rhs.coeffs[k]))


# ---------------------------------------------------------------------------
# Stirling transforms (polynomial f only)


def _poly_coeffs(f) -> list[MPoly]:
    if isinstance(f, CoeffSeq):
        raise SeriesDomainError(
            "Stirling transforms need a polynomial f: pass its finite coefficient list"
        )
    coeffs = [as_poly(c) for c in f]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _eval_poly(coeffs: Sequence[MPoly], n: int) -> MPoly:
    out = ZERO_POLY
    for c in reversed(coeffs):
        out = out.scale(n) + c
    return out


def _stirling_rhs(coeffs, g: TSeries, table: Callable[[int, int], int], start: int) -> TSeries:
    order = g.order
    derivs = [g]
    top = len(coeffs) - 1
    for _ in range(top):
        derivs.append(series_derivative(derivs[-1]))
    total = TSeries.zero(order)
    for j in range(start, top + 1):
        if not coeffs[j]:
            continue
        inner = TSeries.zero(order)
        for k in range(j + 1):
            s = table(j, k)
            if s:
                inner = inner + derivs[k].mul_t(k).scale(s)
        total = total + inner.scale(coeffs[j])
    return total


def stirling_transform(f_taylor, g: TSeries, order: int | None = None) -> TransformReport:
    """Both sides of
    sum_n g_n f(n) t^n = sum_j f_j sum_k S(j,k) t^k g^(k)(t)
    for a polynomial f with Taylor coefficients ``f_taylor``."""
    coeffs = _poly_coeffs(f_taylor)
    if order is not None and order != g.order:
        g = g.truncate(order)
    lhs = TSeries(
        [g.coeffs[n] * _eval_poly(coeffs, n) for n in range(g.order + 1)],
        g.order,
        g.reliable_order,
    )
    rhs = _stirling_rhs(coeffs, g, stirling2, 0)
    return compare(lhs, rhs)


def r_stirling_transform(f_taylor, g: TSeries, r: int, order: int | None = None) -> TransformReport:
    """Both sides of the r-Stirling transform
    sum_{n>=r} g_n (n)_r f_r(n)/n^r t^n = sum_{j>=r} f_j sum_k S_r(j,k) t^k g^(k)(t)
    where f_r drops the first r Taylor terms of f."""
    coeffs = _poly_coeffs(f_taylor)
    if r < 0:
        raise ContractViolation("r must be nonnegative")
    if len(coeffs) - 1 < r:
        raise SeriesDomainError(f"polynomial of degree {len(coeffs) - 1} is below r = {r}")
    if order is not None and order != g.order:
        g = g.truncate(order)
    # f_r(n) / n^r = sum_{j>=r} f_j n^(j-r), a polynomial
    reduced = coeffs[r:]
    lhs = TSeries(
        [
            g.coeffs[n] * _eval_poly(reduced, n).scale(falling_factorial(n, r)) if n >= r else ZERO_POLY
            for n in range(g.order + 1)
        ],
        g.order,
        g.reliable_order,
    )
    rhs = _stirling_rhs(coeffs, g, lambda j, k: r_stirling2(j, k, r), r)
    return compare(lhs, rhs)
