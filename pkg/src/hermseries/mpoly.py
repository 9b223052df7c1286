"""Sparse multivariate polynomials over the rationals.

The symbol set is fixed: ``x, y, z, p``.  A monomial is stored as one packed
integer (``FIELD_BITS`` bits per exponent, ``x`` in the most significant
field), so monomial products are integer additions and the natural integer
order of keys is the lexicographic order x > y > z > p.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .errors import UnknownSymbolError
from .rational import ONE, ZERO, Q, Rational, format_rational

SYMBOLS: tuple[str, ...] = ("x", "y", "z", "p")
FIELD_BITS = 20
MAX_EXPONENT = (1 << FIELD_BITS) - 1
_FIELD_MASK = MAX_EXPONENT
_SHIFT = {s: FIELD_BITS * (len(SYMBOLS) - 1 - i) for i, s in enumerate(SYMBOLS)}


def _pack(exps: Iterable[int]) -> int:
    exps = tuple(exps)
    if len(exps) != len(SYMBOLS):
        raise ValueError(f"exponent vector must have {len(SYMBOLS)} entries")
    key = 0
    for e in exps:
        e = int(e)
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range")
        key = (key << FIELD_BITS) | e
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> _SHIFT[s]) & _FIELD_MASK for s in SYMBOLS)


def _shift(symbol: str) -> int:
    try:
        return _SHIFT[symbol]
    except KeyError:
        raise UnknownSymbolError(
            f"unknown symbol {symbol!r}; the symbol set is {', '.join(SYMBOLS)}"
        ) from None


class MPoly:
    """Immutable polynomial in ``x, y, z, p`` with Rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None):
        packed: dict[int, Rational] = {}
        for exps, c in (terms or {}).items():
            c = Q(c)
            if c:
                k = _pack(exps)
                packed[k] = packed.get(k, ZERO) + c
                if not packed[k]:
                    del packed[k]
        self._terms = packed
        self._hash = None

    @classmethod
    def _raw(cls, packed: dict[int, Rational]) -> "MPoly":
        # Caller guarantees no zero coefficients.
        obj = cls.__new__(cls)
        obj._terms = packed
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "MPoly":
        c = Q(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, symbol: str, power: int = 1) -> "MPoly":
        shift = _shift(symbol)
        if power < 0 or power > MAX_EXPONENT:
            raise ValueError(f"exponent {power} out of range")
        return cls._raw({power << shift: ONE})

    @classmethod
    def monomial(cls, coeff, **exps: int) -> "MPoly":
        vec = [0] * len(SYMBOLS)
        for s, e in exps.items():
            _shift(s)
            vec[SYMBOLS.index(s)] = e
        return cls({tuple(vec): coeff})

    # -- inspection -------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], Rational]]:
        """(exponent vector, coefficient) pairs in descending lex order."""
        for k in sorted(self._terms, reverse=True):
            yield _unpack(k), self._terms[k]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def scalar(self) -> Rational:
        """The constant term; raises if the polynomial is not a scalar."""
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self._terms.get(0, ZERO)

    def constant_term(self) -> Rational:
        return self._terms.get(0, ZERO)

    def coefficient(self, **exps: int) -> Rational:
        vec = [0] * len(SYMBOLS)
        for s, e in exps.items():
            _shift(s)
            vec[SYMBOLS.index(s)] = e
        return self._terms.get(_pack(vec), ZERO)

    def degree(self, symbol: str | None = None) -> int:
        """Degree in ``symbol`` (total degree if omitted); -1 for zero."""
        if not self._terms:
            return -1
        if symbol is None:
            return max(sum(_unpack(k)) for k in self._terms)
        shift = _shift(symbol)
        return max((k >> shift) & _FIELD_MASK for k in self._terms)

    def symbols(self) -> frozenset[str]:
        used = set()
        for k in self._terms:
            for s in SYMBOLS:
                if (k >> _SHIFT[s]) & _FIELD_MASK:
                    used.add(s)
        return frozenset(used)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) + (-self)

    def scale(self, c) -> "MPoly":
        c = Q(c)
        if not c:
            return ZERO_POLY
        if c == 1:
            return self
        return MPoly._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO_POLY
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return MPoly._raw({ka + kb: ca * cb for ka, ca in a.items()})
        out: dict[int, Rational] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, ZERO) + ca * cb
        return MPoly._raw({k: c for k, c in out.items() if c})

    def __rmul__(self, other) -> "MPoly":
        return self.scale(other)

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            other = other.scalar()
        c = Q(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = ONE_POLY, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and substitution ---------------------------------------

    def derivative(self, symbol: str) -> "MPoly":
        shift = _shift(symbol)
        unit = 1 << shift
        out = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _FIELD_MASK
            if e:
                out[k - unit] = c * e
        return MPoly._raw(out)

    def subs(self, symbol: str, value) -> "MPoly":
        """Substitute ``symbol := value`` where value is an MPoly or scalar."""
        shift = _shift(symbol)
        value = self._coerce(value)
        by_power: dict[int, dict[int, Rational]] = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _FIELD_MASK
            by_power.setdefault(e, {})[k - (e << shift)] = c
        out = ZERO_POLY
        powers = {0: ONE_POLY}
        for e in sorted(by_power):
            if e not in powers:
                powers[e] = value ** e
            out = out + MPoly._raw(by_power[e]) * powers[e]
        return out

    def substitute(self, **values) -> "MPoly":
        out = self
        for s, v in values.items():
            out = out.subs(s, v)
        return out

    # -- equality and hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._terms == other._terms
        try:
            return self._terms == MPoly.const(other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                s if e == 1 else f"{s}^{e}" for s, e in zip(SYMBOLS, exps) if e
            )
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "num": str(int(c.numerator)), "den": str(int(c.denominator))}
            for exps, c in self.terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "MPoly":
        terms = {}
        for item in data:
            exps = tuple(int(e) for e in item["exponents"])
            if exps in terms:
                raise ValueError(f"duplicate monomial {exps}")
            terms[exps] = Q(int(item["num"]), int(item["den"]))
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        """Inverse of ``str``: accepts the canonical rendering."""
        return _parse(text)


ZERO_POLY = MPoly._raw({})
ONE_POLY = MPoly._raw({0: ONE})

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)(?:\s*\*\s*)?)?
        (?P<mono>[a-z](?:\^\d+)?(?:\s*\*\s*[a-z](?:\^\d+)?)*)?\s*""",
    re.VERBOSE,
)


def _parse(text: str) -> MPoly:
    text = text.strip()
    if text == "0":
        return ZERO_POLY
    pos, out, first = 0, {}, True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("mono")):
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        if not first and not m.group("sign"):
            raise ValueError(f"missing operator before {text[pos:]!r}")
        first = False
        c = Q(m.group("coef") or "1")
        if m.group("sign") == "-":
            c = -c
        vec = [0] * len(SYMBOLS)
        if m.group("mono"):
            for factor in m.group("mono").split("*"):
                factor = factor.strip()
                name, _, power = factor.partition("^")
                _shift(name)
                vec[SYMBOLS.index(name)] += int(power or 1)
        key = tuple(vec)
        out[key] = out.get(key, ZERO) + c
        pos = m.end()
    return MPoly(out)


def as_poly(value) -> MPoly:
    return value if isinstance(value, MPoly) else MPoly.const(value)


X = MPoly.var("x")
Y = MPoly.var("y")
Z = MPoly.var("z")
P = MPoly.var("p")
