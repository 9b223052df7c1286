"""Exact rational scalars.

All scalars are ``gmpy2.mpq`` values: arbitrary precision, always stored in
lowest terms with a positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import gmpy2

Rational = gmpy2.mpq

ZERO = Rational(0)
ONE = Rational(1)


def Q(value, den=None) -> Rational:
    """Coerce ``value`` to a Rational.

    Accepts ints, Fractions, mpq values and strings of the form ``"a/b"`` or
    ``"a"``.  Floats are rejected: exact code paths never see them.
    """
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Rational(int(value), int(den))
    if isinstance(value, float):
        raise TypeError("floats are not exact rationals; convert explicitly")
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        # Fraction's parser is strict and handles signs and whitespace.
        frac = Fraction(text)
        return Rational(frac.numerator, frac.denominator)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def from_float(value: float) -> Rational:
    """Exact binary value of a double, as a Rational."""
    return Rational(value)


def is_canonical(value: Rational) -> bool:
    num, den = int(value.numerator), int(value.denominator)
    return den > 0 and gmpy2.gcd(abs(num), den) == 1


def format_rational(value: Rational) -> str:
    """``"num/den"``, or just ``"num"`` when the denominator is 1."""
    value = Q(value)
    if value.denominator == 1:
        return str(int(value.numerator))
    return f"{int(value.numerator)}/{int(value.denominator)}"


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def inv_factorial(n: int) -> Rational:
    return Rational(1, factorial(n))
