"""Rationals, sparse polynomials and truncated series."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermseries.errors import ContractViolation, SeriesDomainError, UnknownSymbolError
from hermseries.mpoly import ONE_POLY, P, X, Y, Z, ZERO_POLY, MPoly
from hermseries.rational import Q, format_rational, is_canonical
from hermseries.series import (
    TSeries,
    euler_operator,
    euler_operator_by_stirling,
    geometric,
    series_compose,
    series_derivative,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    shift_div_t,
    substitute_polynomial,
    taylor_shift,
)

ORDER = 6

rationals = st.builds(lambda n, d: Q(n, d), st.integers(-20, 20), st.integers(1, 12))
monomials = st.tuples(*[st.integers(0, 3)] * 4)
polys = st.dictionaries(monomials, rationals, max_size=4).map(MPoly)
scalar_series = st.lists(rationals, min_size=ORDER + 1, max_size=ORDER + 1).map(TSeries)
poly_series = st.lists(polys, min_size=ORDER + 1, max_size=ORDER + 1).map(TSeries)


# -- rationals -----------------------------------------------------------------


def test_rational_parsing_and_formatting():
    assert Q("6/4") == Q(3, 2)
    assert format_rational(Q("-6/4")) == "-3/2"
    assert format_rational(Q(8, 4)) == "2"
    assert Q(Fraction(1, 3)) == Q(1, 3)
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(ZeroDivisionError):
        Q(1, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rationals_are_canonical(n, d):
    assert is_canonical(Q(n, d))
    assert Q(n, d) == Fraction(n, d)


# -- polynomials -----------------------------------------------------------------


def test_polynomial_rendering_is_canonical():
    h4 = (X ** 4).scale(16) - (X ** 2).scale(48) + 12
    assert str(h4) == "16*x^4 - 48*x^2 + 12"
    assert str((Y * P).scale(Q(-1, 3))) == "-1/3*y*p"
    assert str(ZERO_POLY) == "0"
    assert str(X - X) == "0"


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        MPoly.var("w")


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO_POLY
    assert a * ONE_POLY == a


@given(polys)
@settings(max_examples=60)
def test_text_and_json_round_trip(a):
    assert MPoly.parse(str(a)) == a
    assert MPoly.from_json(a.to_json()) == a


def test_derivative_and_substitution():
    f = X ** 3 * Y + Z.scale(2)
    assert f.derivative("x") == (X ** 2 * Y).scale(3)
    assert f.subs("x", Y + 1) == (Y + 1) ** 3 * Y + Z.scale(2)
    assert f.substitute(x=2, y=Q(1, 2), z=1).scalar() == 6


def test_coefficient_and_degree():
    f = (X ** 2 * P).scale(5) + Y
    assert f.coefficient(x=2, p=1) == 5
    assert f.degree() == 3
    assert f.degree("y") == 1
    assert f.symbols() == frozenset("xyp")


# -- series ------------------------------------------------------------------------


@given(poly_series, poly_series, poly_series)
@settings(max_examples=30, deadline=None)
def test_series_ring_laws(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c)


@given(scalar_series)
@settings(max_examples=40, deadline=None)
def test_inverse(a):
    if not a.constant_term():
        with pytest.raises(SeriesDomainError):
            series_inverse(a)
        return
    assert series_mul(a, series_inverse(a)) == TSeries.one(ORDER)
    assert series_inverse(series_inverse(a)) == a


@given(scalar_series)
@settings(max_examples=40, deadline=None)
def test_exp_log_round_trip(a):
    a0 = TSeries([0] + list(a.coeffs[1:]))
    assert series_log(series_exp(a0)) == a0
    a1 = TSeries([1] + list(a.coeffs[1:]))
    assert series_exp(series_log(a1)) == a1


@given(scalar_series, scalar_series)
@settings(max_examples=30, deadline=None)
def test_exp_is_a_homomorphism(a, b):
    a = TSeries([0] + list(a.coeffs[1:]))
    b = TSeries([0] + list(b.coeffs[1:]))
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


@given(scalar_series, scalar_series, scalar_series)
@settings(max_examples=25, deadline=None)
def test_compose_associative(f, g, h):
    g = TSeries([0] + list(g.coeffs[1:]))
    h = TSeries([0] + list(h.coeffs[1:]))
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


def test_domain_errors():
    one_plus_t = TSeries([1, 1], 4)
    with pytest.raises(SeriesDomainError):
        series_exp(one_plus_t)
    with pytest.raises(SeriesDomainError):
        series_log(TSeries([2, 1], 4))
    with pytest.raises(SeriesDomainError):
        series_compose(one_plus_t, one_plus_t)
    with pytest.raises(SeriesDomainError):
        shift_div_t(one_plus_t)
    with pytest.raises(SeriesDomainError):
        series_inverse(TSeries([X, 1], 3))


def test_contract_violations():
    with pytest.raises(ContractViolation):
        TSeries([1], 3) + TSeries([1], 4)
    with pytest.raises(ContractViolation):
        TSeries([1, 2], 3).coefficient(4)
    with pytest.raises(ContractViolation):
        euler_operator(TSeries([1], 2), 3)


def test_reliable_order_bookkeeping():
    g = geometric(8)
    d = series_derivative(g)
    assert d.reliable_order == 7
    assert d.coeffs[:8] == tuple(MPoly.const(k + 1) for k in range(8))
    s = shift_div_t(g.mul_t(2), 2)
    assert s.reliable_order == 6
    assert s.compared_order(g) == 6
    assert s.agrees_with(g)


def test_series_text_and_json_round_trip():
    s = TSeries([1, X, Q(-1, 2) * Y, 0], 3)
    assert str(s) == "[1, x, -1/2*y, 0]"
    assert TSeries.parse(str(s)) == s
    assert TSeries.from_json(s.to_json()) == s


@given(scalar_series, st.integers(0, ORDER))
@settings(max_examples=30, deadline=None)
def test_euler_operator_matches_stirling_expansion(a, n):
    direct = euler_operator(a, n, check=True)
    assert direct.agrees_with(euler_operator_by_stirling(a, n))


def test_substitution_and_taylor_shift_agree():
    poly = X ** 4 - (X * Y).scale(3) + 2
    order = 5
    arg = TSeries([X, -1], order)
    assert substitute_polynomial(poly, "x", arg) == taylor_shift(poly, "x", MPoly.const(-1), order)
