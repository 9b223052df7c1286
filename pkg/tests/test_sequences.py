"""Number sequences, Stirling tables and finite binomial identities."""
from __future__ import annotations

from math import comb, factorial

import pytest

from hermseries.errors import SeriesDomainError
from hermseries.mpoly import P, ZERO_POLY
from hermseries.rational import Q
from hermseries.sequences import (
    GENERATORS,
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
from hermseries.series import TSeries, coefficient, series_inverse, series_mul

from conftest import brute_stirling


def test_harmonic_values():
    assert harmonic(0) == 0
    assert harmonic(3) == Q(11, 6)
    assert harmonic2(2) == Q(5, 4)


def test_fibonacci_lucas_values():
    assert (fibonacci(0), fibonacci(1), fibonacci(10)) == (0, 1, 55)
    assert (lucas(0), lucas(1)) == (2, 1)


def test_bell_fubini_values():
    assert [bell(n) for n in range(5)] == [1, 1, 2, 5, 15]
    assert [fubini(n) for n in range(5)] == [1, 1, 3, 13, 75]


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_memo_is_stable(name):
    gen = GENERATORS[name]
    first = gen.prefix(15)
    assert gen.prefix(15) == first
    assert [gen(k) for k in range(15)] == first


def test_recurrences_hold():
    for n in range(1, 25):
        assert harmonic(n) - harmonic(n - 1) == Q(1, n)
        assert harmonic2(n) - harmonic2(n - 1) == Q(1, n * n)
        assert bell(n) == sum(comb(n - 1, k) * bell(k) for k in range(n))
        assert 2 * fubini(n) == sum(comb(n, k) * fubini(k) for k in range(n + 1))
    for n in range(2, 25):
        assert fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2)
        assert lucas(n) == lucas(n - 1) + lucas(n - 2)


def test_generating_function_cross_check():
    order = 12
    den = series_inverse(TSeries.polynomial([1, -1, -1], order))
    fib = series_mul(TSeries.polynomial([0, 1], order), den)
    luc = series_mul(TSeries.polynomial([2, -1], order), den)
    for n in range(order + 1):
        assert coefficient(fib, n).scalar() == fibonacci(n)
        assert coefficient(luc, n).scalar() == lucas(n)


def test_stirling_boundaries():
    for n in range(1, 10):
        assert stirling2(n, 1) == 1
        assert stirling2(n, n) == 1
        assert stirling2(n, 0) == 0
        assert stirling2(n, n + 1) == 0
    assert stirling2(4, 2) == 7
    assert sum(comb(5, k) * stirling2(k, 2) for k in range(6)) == stirling2(6, 3)


@pytest.mark.parametrize("n", range(10))
def test_stirling_matches_partition_enumeration(n):
    assert [stirling2(n, k) for k in range(n + 1)] == [brute_stirling(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("r", range(4))
def test_r_stirling_matches_restricted_enumeration(r):
    for n in range(r, 9):
        for k in range(n + 1):
            assert r_stirling2(n, k, r) == brute_stirling(n, k, r), (n, k, r)


def test_r_stirling_small_cases():
    for r in range(5):
        assert r_stirling2(r, r, r) == 1
    # {3,2}_2 by enumeration: {1,3}{2} and {1}{2,3}
    assert r_stirling2(3, 2, 2) == 2 == brute_stirling(3, 2, 2)
    with pytest.raises(SeriesDomainError):
        r_stirling2(1, 1, 2)
    for n in range(13):
        for k in range(13):
            assert r_stirling2(n, k, 0) == stirling2(n, k)


def test_falling_factorial():
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(P, 2) == P * P - P
    assert sum(stirling2(4, k) * falling_factorial(3, k) for k in range(5)) == 81
    m, n, r = 4, 5, 2
    assert falling_factorial(m, r) * m ** (n - r) == sum(
        r_stirling2(n, k, r) * falling_factorial(m, k) for k in range(n + 1))


def test_binom_symbolic():
    assert binom_symbolic(P, 0) == 1
    assert binom_symbolic(P, 2) == (P * P - P).scale(Q(1, 2))
    for n in range(11):
        lhs = sum((binom_symbolic(P + k, k).scale((-1) ** k * comb(n, k)) for k in range(n + 1)), ZERO_POLY)
        assert lhs == binom_symbolic(P, n).scale((-1) ** n)


def test_stirling_function_integer_alpha():
    for alpha in range(7):
        for n in range(10):
            assert stirling_function(alpha, n) == stirling2(alpha, n)


# Finite binomial identities, written out independently of the catalog.


def _sum(n, f):
    return sum((comb(n, k) * f(k) for k in range(n + 1)), Q(0))


def _alt(n, f):
    return sum((comb(n, k) * (-1) ** k * f(k) for k in range(n + 1)), Q(0))


N_MAX = 25


def test_harmonic_binomial_identities():
    for n in range(N_MAX + 1):
        assert _alt(n, lambda k: Q(1, k + 1)) == Q(1, n + 1)
        assert _alt(n, lambda k: Q(1, k) if k else 0) == -harmonic(n)
        assert _alt(n, lambda k: harmonic(k) / (k + 1)) == -harmonic(n) / (n + 1)
        assert _alt(n, lambda k: harmonic(k) / k if k else 0) == -harmonic2(n)
        if n:
            assert _alt(n, harmonic) == Q(-1, n)


def test_fibonacci_lucas_binomial_identities():
    F, L = fibonacci, lucas
    for n in range(N_MAX + 1):
        assert _sum(n, F) == F(2 * n)
        assert _sum(n, lambda k: (-1) ** (n - k) * F(2 * k)) == F(n)
        assert _alt(n, lambda k: F(2 * k)) == (-1) ** n * F(n)
        assert _alt(n, F) == -F(n)
        assert _alt(n, L) == L(n)
        assert _sum(n, L) == L(2 * n)
        assert _sum(n, lambda k: (-1) ** (n - k) * L(2 * k)) == L(n)
        assert _alt(n, lambda k: L(2 * k)) == (-1) ** n * L(n)


def test_exponential_and_geometric_number_identities():
    for n in range(N_MAX + 1):
        assert _sum(n, bell) == bell(n + 1)
        assert _sum(n, lambda k: (-1) ** (n - k) * bell(k + 1)) == bell(n)
        assert _alt(n, lambda k: bell(k + 1)) == (-1) ** n * bell(n)
        if n:
            assert _sum(n, fubini) == 2 * fubini(n)
        # inverse forms, with the k = 0 term adjusted for the n = 0 defect
        assert _sum(n, lambda k: (-1) ** (n - k) * (2 * fubini(k) - (k == 0))) == fubini(n)
        assert _alt(n, lambda k: 2 * fubini(k) - (k == 0)) == (-1) ** n * fubini(n)


def test_uncorrected_geometric_inverse_is_off_by_one():
    # without the adjustment the signed inverse misses by exactly 1 for every n
    for n in range(N_MAX + 1):
        assert _alt(n, lambda k: 2 * fubini(k)) - (-1) ** n * fubini(n) == 1


def test_stirling_binomial_identities():
    for n in range(N_MAX + 1):
        for m in range(6):
            assert _sum(n, lambda k: stirling2(k, m)) == stirling2(n + 1, m + 1)
            assert _alt(n, lambda k: stirling2(k + 1, m + 1)) == (-1) ** n * stirling2(n, m)
        for alpha in range(1, 7):
            assert _alt(n, lambda k: k ** alpha) == (-1) ** n * factorial(n) * stirling2(alpha, n)
        for m in range(7):
            assert sum(stirling2(n, k) * falling_factorial(m, k) for k in range(n + 1)) == m ** n
