"""Hermite, Laguerre, exponential and geometric polynomial families.

Every family has at least two independent constructions so tests can use one
as the oracle for the other.  Hermite polynomials follow the physicists'
convention (generating function exp(2xt - t^2)).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import SeriesDomainError
from .mpoly import ONE_POLY, SYMBOLS, X, ZERO_POLY, MPoly, as_poly
from .rational import Q
from .sequences import r_stirling2, stirling2
from .series import (
    TSeries,
    euler_operator,
    exp_of_polynomial,
    geometric,
    series_compose,
    series_exp,
    series_mul,
    substitute_polynomial,
    taylor_shift,
)


# ---------------------------------------------------------------------------
# Hermite


@lru_cache(maxsize=None)
def hermite(n: int) -> MPoly:
    """H_n(x) from H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    prev, cur = ONE_POLY, X.scale(2)
    if n == 0:
        return prev
    for m in range(1, n):
        prev, cur = cur, (X * cur).scale(2) - prev.scale(2 * m)
    return cur


def hermite_from_generating_function(n: int) -> MPoly:
    """n! times the t^n coefficient of exp(2xt - t^2)."""
    gf = exp_of_polynomial([0, X.scale(2), -1], max(n, 2))
    return gf.coefficient(n).scale(factorial(n))


def hermite_rodrigues(n: int) -> MPoly:
    """(-1)^n e^{x^2} (d/dx)^n e^{-x^2}.

    The n-th derivative of e^{-x^2} is P_n(x) e^{-x^2} with
    P_{n+1} = P_n' - 2x P_n, so only polynomial derivatives are needed.
    """
    poly = ONE_POLY
    for _ in range(n):
        poly = poly.derivative("x") - (X * poly).scale(2)
    return poly if n % 2 == 0 else -poly


def hermite_at(n: int, arg) -> MPoly:
    """H_n evaluated at a polynomial argument."""
    arg = as_poly(arg)
    if arg == X:
        return hermite(n)
    return hermite(n).subs("x", arg)


@lru_cache(maxsize=4096)
def hermite_series(n: int, order: int, base: MPoly = X, step: MPoly = MPoly.const(-1)) -> TSeries:
    """H_n(base + step*t) as a series in t (e.g. H_n(x - t))."""
    shifted = taylor_shift(hermite(n), "x", step, order)
    if base != X:
        shifted = shifted.subs("x", base)
    return shifted


def hermite_shifted(n: int, shift):
    """H_n at ``shift``: an MPoly argument gives an MPoly, a TSeries argument
    (e.g. ``x - t``) gives the substituted series."""
    if isinstance(shift, TSeries):
        return substitute_polynomial(hermite(n), "x", shift)
    return hermite_at(n, shift)


# ---------------------------------------------------------------------------
# Laguerre


def laguerre(n: int, var: str = "z") -> MPoly:
    """L_n = sum_k C(n,k) (-1)^k v^k / k!."""
    v = MPoly.var(var)
    out = ZERO_POLY
    for k in range(n + 1):
        out = out + (v ** k).scale(Q((-1) ** k * comb(n, k), factorial(k)))
    return out


def laguerre_from_generating_function(n: int, var: str = "z") -> MPoly:
    """t^n coefficient of exp(-v t / (1 - t)) / (1 - t)."""
    order = max(n, 1)
    v = MPoly.var(var)
    inner = geometric(order).mul_t(1).scale(-v)
    return series_mul(geometric(order), series_exp(inner)).coefficient(n)


# ---------------------------------------------------------------------------
# exponential / geometric polynomials and their r-analogues


def exp_poly(n: int, var: str = "x") -> MPoly:
    """phi_n(v) = sum_k S(n,k) v^k."""
    v = MPoly.var(var)
    return sum(((v ** k).scale(stirling2(n, k)) for k in range(n + 1)), ZERO_POLY)


def geom_poly(n: int, var: str = "x") -> MPoly:
    """w_n(v) = sum_k S(n,k) k! v^k."""
    v = MPoly.var(var)
    return sum(((v ** k).scale(stirling2(n, k) * factorial(k)) for k in range(n + 1)), ZERO_POLY)


def r_exp_poly_closed(n: int, r: int, var: str = "x") -> MPoly:
    """Candidate closed form sum_k S_r(n,k) v^k."""
    _check_nr(n, r)
    v = MPoly.var(var)
    return sum(((v ** k).scale(r_stirling2(n, k, r)) for k in range(n + 1)), ZERO_POLY)


def r_geom_poly_closed(n: int, r: int, var: str = "x") -> MPoly:
    """Candidate closed form sum_k S_r(n,k) k! v^k."""
    _check_nr(n, r)
    v = MPoly.var(var)
    return sum(((v ** k).scale(r_stirling2(n, k, r) * factorial(k)) for k in range(n + 1)), ZERO_POLY)


def _check_nr(n: int, r: int) -> None:
    if r < 0 or n < r:
        raise SeriesDomainError(f"need n >= r >= 0 (n={n}, r={r})")


def series_to_poly(s: TSeries, var: str = "x", degree: int | None = None) -> MPoly:
    """Read a series whose coefficients are scalars as a polynomial in ``var``.

    Coefficients above ``degree`` must vanish (checked up to the reliable
    order); otherwise the series is not a polynomial of that degree.
    """
    top = s.reliable_order if degree is None else degree
    for k in range(top + 1, s.reliable_order + 1):
        if s.coeffs[k]:
            raise SeriesDomainError(f"series has a nonzero t^{k} term beyond degree {degree}")
    v = MPoly.var(var)
    out = ZERO_POLY
    for k in range(min(top, s.order) + 1):
        out = out + (v ** k) * s.coeffs[k]
    return out


def exp_t(order: int) -> TSeries:
    return TSeries([Q(1, factorial(k)) for k in range(order + 1)], order)


def r_exp_poly_series(n: int, r: int, order: int) -> TSeries:
    """e^{-t} (t d/dt)^{n-r} (t^r e^t) as a series."""
    _check_nr(n, r)
    lhs = euler_operator(exp_t(order).mul_t(r), n - r)
    return series_mul(lhs, series_exp(TSeries.t(order, 1, -1)))


def r_exp_poly(n: int, r: int, var: str = "x") -> MPoly:
    """r-exponential polynomial defined by the operator identity
    (t d/dt)^{n-r} t^r e^t = poly(t) e^t, extracted from truncated series."""
    order = n + 2
    return series_to_poly(r_exp_poly_series(n, r, order), var, degree=n)


def r_geom_poly_series(n: int, r: int, order: int) -> TSeries:
    """(1 - t) r! (t d/dt)^{n-r} t^r/(1-t)^{r+1}, still in the variable t/(1-t)."""
    _check_nr(n, r)
    base = (geometric(order) ** (r + 1)).mul_t(r).scale(factorial(r))
    lhs = euler_operator(base, n - r)
    one_minus_t = TSeries.polynomial([1, -1], order)
    return series_mul(one_minus_t, lhs)


def r_geom_poly(n: int, r: int, var: str = "x") -> MPoly:
    """r-geometric polynomial defined by the operator identity
    r! (t d/dt)^{n-r} t^r/(1-t)^{r+1} = poly(t/(1-t)) / (1 - t).

    The polynomial is recovered by substituting t = u/(1+u).
    """
    order = n + 2
    u_over_1pu = geometric(order, -1).mul_t(1)
    in_u = series_compose(r_geom_poly_series(n, r, order), u_over_1pu)
    return series_to_poly(in_u, var, degree=n)


def exp_poly_operator(n: int, var: str = "x") -> MPoly:
    return r_exp_poly(n, 0, var)


def geom_poly_operator(n: int, var: str = "x") -> MPoly:
    return r_geom_poly(n, 0, var)


def r_exp_poly_agrees(n: int, r: int) -> bool:
    return r_exp_poly(n, r) == r_exp_poly_closed(n, r)


def r_geom_poly_agrees(n: int, r: int) -> bool:
    return r_geom_poly(n, r) == r_geom_poly_closed(n, r)


def poly_as_series(poly: MPoly, var: str, order: int) -> TSeries:
    """Reinterpret a univariate polynomial in ``var`` as a polynomial in t."""
    idx = SYMBOLS.index(var)
    coeffs = [ZERO_POLY] * (order + 1)
    for exps, c in poly.terms():
        e = exps[idx]
        rest = list(exps)
        rest[idx] = 0
        if e <= order:
            coeffs[e] = coeffs[e] + MPoly({tuple(rest): c})
    return TSeries(coeffs, order)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyFamily:
    family: str
    degree: int
    value: MPoly
    r: int | None = None

    def __str__(self) -> str:
        return str(self.value)


FAMILIES = ("hermite", "laguerre", "exp_poly", "geom_poly", "r_exp_poly", "r_geom_poly")


def family(name: str, n: int, r: int | None = None) -> PolyFamily:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if name == "hermite":
        value = hermite(n)
    elif name == "laguerre":
        value = laguerre(n)
    elif name == "exp_poly":
        value = exp_poly(n)
    elif name == "geom_poly":
        value = geom_poly(n)
    elif name in ("r_exp_poly", "r_geom_poly"):
        if r is None:
            raise ValueError(f"{name} needs r")
        value = r_exp_poly(n, r) if name == "r_exp_poly" else r_geom_poly(n, r)
    else:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    return PolyFamily(name, n, value, r)
