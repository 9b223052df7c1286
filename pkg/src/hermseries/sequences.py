"""Exact number sequences: harmonic numbers, Fibonacci/Lucas, exponential
(Bell) and geometric (Fubini) numbers, Stirling and r-Stirling numbers of the
second kind, falling factorials and binomial coefficients with a symbolic top.

Each memoized sequence is a :class:`SeqGen` registered in ``GENERATORS``;
the public functions look the generator up at call time, so a test can swap
in a generator with different seeds.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .errors import SeriesDomainError
from .mpoly import ONE_POLY, MPoly, as_poly
from .rational import ONE, ZERO, Q, Rational


@dataclass
class SeqGen:
    """Memoized sequence defined by seed values and a recurrence.

    ``rule(memo, n)`` computes term n from the already-known terms
    ``memo[0..n-1]``; it is only called for ``n >= len(seeds)``.
    """

    name: str
    seeds: tuple
    rule: Callable[[list, int], object]
    _memo: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        self._memo = [Q(s) for s in self.seeds]

    def __call__(self, n: int) -> Rational:
        if n < 0:
            raise ValueError(f"{self.name}: negative index {n}")
        if n < len(self._memo):
            return self._memo[n]
        with self._lock:
            while len(self._memo) <= n:
                self._memo.append(Q(self.rule(self._memo, len(self._memo))))
            return self._memo[n]

    def prefix(self, count: int) -> list[Rational]:
        if count <= 0:
            return []
        self(count - 1)
        return list(self._memo[:count])

    def with_seeds(self, seeds: tuple) -> "SeqGen":
        return SeqGen(self.name, tuple(seeds), self.rule)


def _harmonic_rule(memo, n):
    return memo[n - 1] + Q(1, n)


def _harmonic2_rule(memo, n):
    return memo[n - 1] + Q(1, n * n)


def _linear2_rule(memo, n):
    return memo[n - 1] + memo[n - 2]


def _bell_rule(memo, n):
    # phi_{m+1} = sum_k C(m, k) phi_k
    m = n - 1
    return sum((comb(m, k) * memo[k] for k in range(m + 1)), ZERO)


def _fubini_rule(memo, n):
    # 2 w_n = sum_{k<=n} C(n, k) w_k, solved for w_n (valid for n >= 1)
    return sum((comb(n, k) * memo[k] for k in range(n)), ZERO)


def _default_generators() -> dict[str, SeqGen]:
    return {
        "harmonic": SeqGen("harmonic", (0,), _harmonic_rule),
        "harmonic2": SeqGen("harmonic2", (0,), _harmonic2_rule),
        "fibonacci": SeqGen("fibonacci", (0, 1), _linear2_rule),
        "lucas": SeqGen("lucas", (2, 1), _linear2_rule),
        "bell": SeqGen("bell", (1,), _bell_rule),
        "fubini": SeqGen("fubini", (1,), _fubini_rule),
    }


GENERATORS: dict[str, SeqGen] = _default_generators()


def harmonic(n: int) -> Rational:
    return GENERATORS["harmonic"](n)


def harmonic2(n: int) -> Rational:
    return GENERATORS["harmonic2"](n)


def fibonacci(n: int) -> int:
    return int(GENERATORS["fibonacci"](n))


def lucas(n: int) -> int:
    return int(GENERATORS["lucas"](n))


def bell(n: int) -> int:
    return int(GENERATORS["bell"](n))


def fubini(n: int) -> int:
    return int(GENERATORS["fubini"](n))


# ---------------------------------------------------------------------------
# Stirling numbers


def _plain_weight(n: int, k: int) -> int:
    return k


def _unit(n: int, k: int) -> int:
    return 1


class StirlingTable:
    """Triangular cache of (r-)Stirling numbers of the second kind.

    Recurrence ``S(n, k) = w(n, k) S(n-1, k) + d(n, k) S(n-1, k-1)`` with the
    standard coefficients ``w = k`` and ``d = 1``; base row
    ``S(r, k) = [k == r]``.  With r = 0 these are the ordinary Stirling
    numbers.  ``weight`` and ``diagonal`` exist so tests can inject a faulty
    recurrence.
    """

    def __init__(self, r: int = 0, weight: Callable[[int, int], int] = _plain_weight,
                 diagonal: Callable[[int, int], int] = _unit):
        if r < 0:
            raise ValueError("r must be nonnegative")
        self.r = r
        self.weight = weight
        self.diagonal = diagonal
        self._rows: list[list[int]] = [[0] * r + [1]]  # row for n = r
        self._lock = threading.Lock()

    def __call__(self, n: int, k: int) -> int:
        r = self.r
        if n < r:
            raise SeriesDomainError(f"r-Stirling number needs n >= r (n={n}, r={r})")
        if k < 0 or k > n:
            return 0
        idx = n - r
        if idx >= len(self._rows):
            with self._lock:
                while len(self._rows) <= idx:
                    m = r + len(self._rows)
                    prev = self._rows[-1]
                    row = [0] * (m + 1)
                    for j in range(m + 1):
                        left = prev[j] if j < len(prev) else 0
                        diag = prev[j - 1] if 0 < j <= len(prev) else 0
                        row[j] = self.weight(m, j) * left + self.diagonal(m, j) * diag
                    self._rows.append(row)
        return self._rows[idx][k]

    def row(self, n: int) -> list[int]:
        return [self(n, k) for k in range(n + 1)]


_tables: dict[int, StirlingTable] = {}
_tables_lock = threading.Lock()


def stirling_table(r: int = 0) -> StirlingTable:
    table = _tables.get(r)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(r, StirlingTable(r))
    return table


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be nonnegative")
    return stirling_table(0)(n, k)


def r_stirling2(n: int, k: int, r: int) -> int:
    if k < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    if n < r:
        raise SeriesDomainError(f"r-Stirling number needs n >= r (n={n}, r={r})")
    return stirling_table(r)(n, k)


def stirling_function(alpha: int, n: int) -> Rational:
    """(1/n!) sum_k C(n,k) (-1)^(n-k) k^alpha for integer alpha >= 0.

    Computed from the alternating sum, independently of the recurrence.
    """
    if alpha < 0:
        raise SeriesDomainError("exact Stirling functions need integer alpha >= 0")
    total = sum(comb(n, k) * (-1) ** (n - k) * k ** alpha for k in range(n + 1))
    return Q(total, factorial(n))


# ---------------------------------------------------------------------------
# falling factorials and binomials


def falling_factorial(m, k: int):
    """m (m-1) ... (m-k+1); m may be an int, Rational or MPoly."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(m, MPoly):
        out = ONE_POLY
        for j in range(k):
            out = out * (m - j)
        return out
    out = 1 if isinstance(m, int) else ONE
    for j in range(k):
        out = out * (m - j)
    return out


def binom_symbolic(top, n: int) -> MPoly:
    """C(top, n) = (top)_n / n! as an MPoly (top is usually ``p`` or ``p + k``)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return falling_factorial(as_poly(top), n).scale(Q(1, factorial(n)))


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
