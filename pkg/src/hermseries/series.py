"""Truncated power series in ``t`` with MPoly coefficients.

A ``TSeries`` of order N keeps the coefficients of t^0 .. t^N.  Operations
that lose information at the top (differentiation, division by t) lower the
``reliable_order``; comparisons only look at powers up to the smaller
reliable order of the two operands.
"""
from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import ContractViolation, SeriesDomainError
from .mpoly import ONE_POLY, ZERO_POLY, MPoly, as_poly
from .rational import ONE, Q, Rational

DEFAULT_ORDER = 16


class TSeries:
    """Immutable truncated series ``sum_{k<=order} coeffs[k] t^k``."""

    __slots__ = ("order", "coeffs", "reliable_order")

    def __init__(self, coeffs: Sequence, order: int | None = None, reliable_order: int | None = None):
        coeffs = [as_poly(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ContractViolation("series order must be nonnegative")
        if len(coeffs) > order + 1:
            if any(coeffs[order + 1:]):
                raise ContractViolation(
                    f"{len(coeffs)} coefficients do not fit in order {order}"
                )
            coeffs = coeffs[: order + 1]
        coeffs.extend([ZERO_POLY] * (order + 1 - len(coeffs)))
        if reliable_order is None:
            reliable_order = order
        if reliable_order > order:
            raise ContractViolation("reliable_order cannot exceed order")
        self.order = order
        self.coeffs = tuple(coeffs)
        self.reliable_order = max(reliable_order, -1)

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "TSeries":
        return cls([c], order)

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([ONE_POLY], order)

    @classmethod
    def t(cls, order: int, power: int = 1, coeff=1) -> "TSeries":
        """``coeff * t**power`` (zero if the power exceeds the order)."""
        if power > order:
            return cls.zero(order)
        return cls([ZERO_POLY] * power + [as_poly(coeff)], order)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int) -> "TSeries":
        return cls([fn(k) for k in range(order + 1)], order)

    @classmethod
    def polynomial(cls, coeffs: Iterable, order: int) -> "TSeries":
        """A polynomial in t, silently truncated to ``order`` (exact: the
        dropped terms are genuinely above the truncation)."""
        return cls(list(coeffs)[: order + 1], order)

    # -- helpers ------------------------------------------------------------

    def _check(self, other: "TSeries") -> None:
        if not isinstance(other, TSeries):
            raise TypeError(f"expected TSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ContractViolation(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def _new(self, coeffs, reliable: int) -> "TSeries":
        out = TSeries.__new__(TSeries)
        out.order = self.order
        out.coeffs = tuple(coeffs)
        out.reliable_order = max(min(reliable, self.order), -1)
        return out

    def with_reliable(self, reliable_order: int) -> "TSeries":
        return self._new(self.coeffs, min(reliable_order, self.reliable_order))

    def coefficient(self, k: int) -> MPoly:
        if k < 0 or k > self.order:
            raise ContractViolation(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    __getitem__ = coefficient

    def constant_term(self) -> MPoly:
        return self.coeffs[0]

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ContractViolation("truncate cannot raise the order")
        return TSeries(self.coeffs[: order + 1], order, min(order, self.reliable_order))

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order+1 for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            other = TSeries.constant(other, self.order)
        self._check(other)
        return self._new(
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            min(self.reliable_order, other.reliable_order),
        )

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return self._new([-a for a in self.coeffs], self.reliable_order)

    def __sub__(self, other) -> "TSeries":
        if not isinstance(other, TSeries):
            other = TSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other) -> "TSeries":
        return (-self) + other

    def scale(self, c) -> "TSeries":
        """Multiply every coefficient by a scalar or an MPoly."""
        if isinstance(c, MPoly):
            return self._new([a * c for a in self.coeffs], self.reliable_order)
        c = Q(c)
        return self._new([a.scale(c) for a in self.coeffs], self.reliable_order)

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "TSeries":
        return self.scale(other)

    def __truediv__(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return series_mul(self, series_inverse(other))
        if isinstance(other, MPoly):
            other = other.scalar()
        return self.scale(1 / Q(other))

    def __pow__(self, n: int) -> "TSeries":
        if n < 0:
            return series_inverse(self) ** (-n)
        result, base = TSeries.one(self.order), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_t(self, k: int = 1) -> "TSeries":
        """Multiply by t^k.  The top k coefficients fall off exactly, so the
        reliable order moves up with the coefficients."""
        if k < 0:
            raise ContractViolation("use shift_div_t to divide by t")
        if k == 0:
            return self
        coeffs = [ZERO_POLY] * min(k, self.order + 1) + list(self.coeffs[: max(self.order + 1 - k, 0)])
        return self._new(coeffs, self.reliable_order + k)

    def map_coeffs(self, fn: Callable[[MPoly], MPoly]) -> "TSeries":
        return self._new([as_poly(fn(c)) for c in self.coeffs], self.reliable_order)

    def subs(self, symbol: str, value) -> "TSeries":
        return self.map_coeffs(lambda c: c.subs(symbol, value))

    # -- comparison ---------------------------------------------------------

    def compared_order(self, other: "TSeries") -> int:
        self._check(other)
        return min(self.reliable_order, other.reliable_order)

    def first_difference(self, other: "TSeries") -> int | None:
        """Lowest power (within the shared reliable order) where the two
        series differ, or None."""
        for k in range(self.compared_order(other) + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def agrees_with(self, other: "TSeries") -> bool:
        return self.first_difference(other) is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.reliable_order == other.reliable_order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.reliable_order, self.coeffs))

    # -- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"TSeries(order={self.order}, reliable_order={self.reliable_order}, {self})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "reliable_order": self.reliable_order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TSeries":
        coeffs = [MPoly.from_json(c) for c in data["coeffs"]]
        order = int(data["order"])
        if len(coeffs) != order + 1:
            raise ContractViolation("coefficient count does not match order")
        return cls(coeffs, order, int(data["reliable_order"]))

    @classmethod
    def parse(cls, text: str, reliable_order: int | None = None) -> "TSeries":
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError("series text must be a bracketed coefficient list")
        body = text[1:-1].strip()
        parts = [MPoly.parse(s) for s in body.split(",")] if body else []
        if not parts:
            raise ValueError("empty coefficient list")
        return cls(parts, len(parts) - 1, reliable_order)


# ---------------------------------------------------------------------------
# core operations


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    a_nz = [i for i, c in enumerate(ac) if c]
    b_nz = [j for j, c in enumerate(bc) if c]
    out = [ZERO_POLY] * (n + 1)
    for i in a_nz:
        ai = ac[i]
        for j in b_nz:
            if i + j > n:
                break
            out[i + j] = out[i + j] + ai * bc[j]
    return a._new(out, min(a.reliable_order, b.reliable_order))


def _scalar_constant(a: TSeries, what: str) -> Rational:
    c0 = a.coeffs[0]
    if not c0.is_scalar():
        raise SeriesDomainError(f"{what}: constant term {c0} is not a scalar")
    return c0.scalar()


def series_inverse(a: TSeries) -> TSeries:
    """Multiplicative inverse; the constant term must be a nonzero scalar."""
    c0 = _scalar_constant(a, "inverse")
    if not c0:
        raise SeriesDomainError("inverse: constant term is zero")
    inv0 = 1 / c0
    n = a.order
    ac = a.coeffs
    nz = [k for k in range(1, n + 1) if ac[k]]
    out = [MPoly.const(inv0)]
    for m in range(1, n + 1):
        acc = ZERO_POLY
        for k in nz:
            if k > m:
                break
            acc = acc + ac[k] * out[m - k]
        out.append(acc.scale(-inv0))
    return a._new(out, a.reliable_order)


def series_exp(a: TSeries) -> TSeries:
    """exp of a zero-constant series via b' = a' b."""
    if a.coeffs[0]:
        raise SeriesDomainError("exp: constant term must be zero in exact mode")
    n = a.order
    ac = a.coeffs
    # k * a_k, the coefficients of t * a'(t)
    da = [ac[k].scale(k) if ac[k] else ZERO_POLY for k in range(n + 1)]
    nz = [k for k in range(1, n + 1) if ac[k]]
    out = [ONE_POLY]
    for m in range(1, n + 1):
        acc = ZERO_POLY
        for k in nz:
            if k > m:
                break
            acc = acc + da[k] * out[m - k]
        out.append(acc.scale(Q(1, m)))
    return a._new(out, a.reliable_order)


def series_log(a: TSeries) -> TSeries:
    """log of a series whose constant term is exactly 1."""
    c0 = a.coeffs[0]
    if c0 != ONE_POLY:
        raise SeriesDomainError(f"log: constant term must be 1, got {c0}")
    n = a.order
    ac = a.coeffs
    out = [ZERO_POLY]
    # c_m = a_m - (1/m) sum_{k=1}^{m-1} k c_k a_{m-k}
    for m in range(1, n + 1):
        acc = ZERO_POLY
        for k in range(1, m):
            if out[k] and ac[m - k]:
                acc = acc + (out[k] * ac[m - k]).scale(k)
        out.append(ac[m] - acc.scale(Q(1, m)))
    return a._new(out, a.reliable_order)


def series_compose(outer: TSeries, inner: TSeries) -> TSeries:
    """outer(inner(t)); inner must have zero constant term."""
    outer._check(inner)
    if inner.coeffs[0]:
        raise SeriesDomainError("compose: inner series must have zero constant term")
    n = outer.order
    # Horner from the top; inner^k has valuation >= k so this is exact.
    result = TSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = series_mul(result, inner)
        if outer.coeffs[k]:
            c = list(result.coeffs)
            c[0] = c[0] + outer.coeffs[k]
            result = result._new(c, result.reliable_order)
    return result._new(result.coeffs, min(outer.reliable_order, inner.reliable_order))


def series_derivative(a: TSeries) -> TSeries:
    """d/dt.  The top coefficient of the result is padding (zero) and is
    excluded from comparisons via ``reliable_order``."""
    n = a.order
    out = [a.coeffs[k + 1].scale(k + 1) for k in range(n)] + [ZERO_POLY]
    return a._new(out, a.reliable_order - 1)


def shift_div_t(a: TSeries, r: int = 1) -> TSeries:
    """Divide by t^r; the low r coefficients must vanish."""
    if r < 0:
        raise ContractViolation("shift must be nonnegative")
    for k in range(min(r, a.order + 1)):
        if a.coeffs[k]:
            raise SeriesDomainError(f"cannot divide by t^{r}: coefficient of t^{k} is {a.coeffs[k]}")
    out = list(a.coeffs[r:]) + [ZERO_POLY] * min(r, a.order + 1)
    return a._new(out, a.reliable_order - r)


def euler_operator(a: TSeries, n: int, check: bool = False) -> TSeries:
    """Apply (t d/dt) n times.

    With ``check=True`` the result is also rebuilt as
    ``sum_k S(n, k) t^k a^(k)(t)`` (Stirling numbers of the second kind) and
    a ContractViolation is raised if the two disagree.
    """
    if n < 0:
        raise ContractViolation("operator power must be nonnegative")
    if n > a.order:
        raise ContractViolation(f"operator power {n} exceeds series order {a.order}")
    out = a
    for _ in range(n):
        out = out._new([c.scale(k) for k, c in enumerate(out.coeffs)], out.reliable_order)
    if check:
        alt = euler_operator_by_stirling(a, n)
        if not out.agrees_with(alt):
            raise ContractViolation("Euler operator disagrees with its Stirling expansion")
    return out


def euler_operator_by_stirling(a: TSeries, n: int) -> TSeries:
    """``sum_k S(n, k) t^k (d/dt)^k a`` computed with genuine derivatives."""
    from .sequences import stirling2

    total = TSeries.zero(a.order)
    deriv = a
    for k in range(n + 1):
        s = stirling2(n, k)
        if s:
            total = total + deriv.mul_t(k).scale(s)
        deriv = series_derivative(deriv)
    return total


def coefficient(a: TSeries, k: int) -> MPoly:
    return a.coefficient(k)


# ---------------------------------------------------------------------------
# frequently used building blocks


def geometric(order: int, ratio=1) -> TSeries:
    """1 / (1 - ratio*t)."""
    ratio = as_poly(ratio)
    return TSeries([ratio ** k for k in range(order + 1)], order)


def exp_of_polynomial(poly_coeffs: Sequence, order: int) -> TSeries:
    """exp(c1 t + c2 t^2 + ...); ``poly_coeffs[0]`` must be zero."""
    return series_exp(TSeries.polynomial(poly_coeffs, order))


def central_binomial_sqrt(order: int, scale=4) -> TSeries:
    """1/sqrt(1 - scale*t^2) as sum C(2n, n) (scale/4)^n t^(2n).

    Only the ``scale=4`` case has integer coefficients; other scales are
    accepted as rationals.
    """
    from math import comb

    ratio = Q(scale) / 4
    coeffs = [ZERO_POLY] * (order + 1)
    for m in range(order // 2 + 1):
        coeffs[2 * m] = MPoly.const(comb(2 * m, m) * ratio ** m)
    return TSeries(coeffs, order)


def substitute_polynomial(poly: MPoly, symbol: str, value: TSeries) -> TSeries:
    """poly(symbol := value) as a series (Horner in the substituted symbol)."""
    deg = poly.degree(symbol)
    order = value.order
    if deg <= 0:
        return TSeries.constant(poly, order)
    # split poly into coefficients of symbol^e
    parts = [ZERO_POLY] * (deg + 1)
    from .mpoly import SYMBOLS

    idx = SYMBOLS.index(symbol)
    for exps, c in poly.terms():
        e = exps[idx]
        rest = list(exps)
        rest[idx] = 0
        parts[e] = parts[e] + MPoly({tuple(rest): c})
    result = TSeries.constant(parts[deg], order)
    for e in range(deg - 1, -1, -1):
        result = series_mul(result, value) + parts[e]
    return result.with_reliable(value.reliable_order)


def taylor_shift(poly: MPoly, symbol: str, step: MPoly, order: int) -> TSeries:
    """poly(symbol + step*t) expanded in powers of t.

    Coefficient of t^j is (d/dsymbol)^j poly / j! * step^j; exact, and much
    cheaper than generic substitution since only polynomial derivatives are
    involved.
    """
    step = as_poly(step)
    coeffs = []
    d = poly
    fact = ONE
    step_pow = ONE_POLY
    for j in range(order + 1):
        if j:
            d = d.derivative(symbol)
            fact = fact * j
            step_pow = step_pow * step
        if not d:
            break
        coeffs.append((d * step_pow).scale(1 / fact))
    return TSeries(coeffs, order)
