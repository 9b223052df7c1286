"""Double-precision shadow of the exact registry.

Both sides of an identity are summed term by term with ``math.fsum`` at a
concrete point.  Hermite-shaped records are evaluated natively in floats
(float Hermite recurrence, float coefficient values); the bilinear and
closed-form records have hand-written evaluators; everything else falls back
to the exact coefficients evaluated at the point.

``measure_acceleration`` reports how many terms each side needs before every
later partial sum stays within ``tol`` of a truncation-30 reference.
"""
from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from math import comb, factorial, fsum
from typing import Callable, Iterable, Sequence

from .errors import SeriesDomainError
from .mpoly import SYMBOLS, MPoly, as_poly
from .rational import Q, from_float
from .registry import IdentityRecord, Registry

SAFETY_RADIUS = 0.25
REFERENCE_TRUNCATION = 30

Terms = list[float]


@dataclass(frozen=True)
class EvalPoint:
    """A point (x, y, z, t) plus the marker value p and the truncation.

    ``alpha`` switches EQ53 to a real exponent; by default that record is
    evaluated through its integer-exponent exact form.
    """

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    t: float = 0.0
    truncation: int = REFERENCE_TRUNCATION
    p: float = 0.5
    alpha: float | None = None

    def check(self, radius: float = SAFETY_RADIUS) -> None:
        if not abs(self.t) <= radius:
            raise SeriesDomainError(f"|t| = {abs(self.t)} is outside the safety radius {radius}")
        if self.truncation < 0:
            raise SeriesDomainError("truncation must be nonnegative")

    def env(self) -> dict[str, float]:
        return {"x": self.x, "y": self.y, "z": self.z, "p": self.p}

    @classmethod
    def parse(cls, text: str, truncation: int = REFERENCE_TRUNCATION, **extra) -> "EvalPoint":
        """``"x,y,z,t"`` (missing trailing values default to 0)."""
        parts = [s.strip() for s in text.split(",") if s.strip()]
        if not 1 <= len(parts) <= 4:
            raise ValueError(f"expected x,y,z,t, got {text!r}")
        vals = [float(s) for s in parts] + [0.0] * (4 - len(parts))
        return cls(*vals, truncation=truncation, **extra)


def random_point(rng: random.Random, truncation: int = REFERENCE_TRUNCATION,
                 radius: float = SAFETY_RADIUS) -> EvalPoint:
    return EvalPoint(
        x=rng.uniform(-1, 1), y=rng.uniform(-1, 1), z=rng.uniform(-1, 1),
        t=rng.uniform(-radius, radius), truncation=truncation, p=rng.uniform(-1, 1),
    )


# ---------------------------------------------------------------------------
# float building blocks


def hermite_values(n_max: int, u: float) -> list[float]:
    """H_0(u) .. H_{n_max}(u) from the three-term recurrence."""
    out = [1.0, 2.0 * u]
    for m in range(1, n_max):
        out.append(2.0 * u * out[m] - 2.0 * m * out[m - 1])
    return out[: n_max + 1]


def poly_value(poly: MPoly, env: dict[str, float]) -> float:
    vals = [env[s] for s in SYMBOLS]
    parts = []
    for exps, c in poly.terms():
        term = float(c)
        for v, e in zip(vals, exps):
            if e:
                term *= v ** e
        parts.append(term)
    return fsum(parts)


def _value(obj, env) -> float:
    if isinstance(obj, (int, float)):
        return float(obj)
    return poly_value(as_poly(obj), env)


def _powers(t: float, n: int) -> list[float]:
    out = [1.0]
    for _ in range(n):
        out.append(out[-1] * t)
    return out


def stirling_function_real(alpha: float, n: int) -> float:
    """{alpha, n} = (1/n!) sum_k C(n,k) (-1)^(n-k) k^alpha for real alpha > 0.

    k^alpha is exp(alpha log k); the k = 0 term is its limit 0.
    """
    if alpha <= 0:
        raise SeriesDomainError("real Stirling functions are evaluated for alpha > 0 only")
    parts = [comb(n, k) * (-1) ** (n - k) * math.exp(alpha * math.log(k)) for k in range(1, n + 1)]
    return fsum(parts) / factorial(n)


# ---------------------------------------------------------------------------
# evaluators: each returns (lhs_terms, rhs_terms), term n belonging to t^n


def _hermite_form_terms(record: IdentityRecord, pt: EvalPoint, n: int) -> tuple[Terms, Terms]:
    form = record.hermite_form
    env = pt.env()
    tp = _powers(pt.t, n)
    hx = hermite_values(n, pt.x)
    hxt = hermite_values(n, pt.x - pt.t)
    lhs = []
    for k in range(n + 1):
        ak = _value(form.a(k), env)
        lhs.append(ak * hx[k] * tp[k] / factorial(k) if ak else 0.0)
    if form.lhs_offset:
        lhs[0] -= _value(form.lhs_offset, env)
    pre = math.exp(2 * pt.x * pt.t - pt.t * pt.t)
    rhs = []
    for k in range(n + 1):
        ck = _value(form.c(k), env)
        w = 1.0 / factorial(k) if form.rhs_weight is None else _value(form.rhs_weight(k), env)
        rhs.append(pre * ck * w * hxt[k] * tp[k] if ck else 0.0)
    return lhs, rhs


def _eq53_real_terms(pt: EvalPoint, n: int) -> tuple[Terms, Terms]:
    alpha = pt.alpha
    tp = _powers(pt.t, n)
    hx = hermite_values(n, pt.x)
    hxt = hermite_values(n, pt.x - pt.t)
    lhs = [0.0] + [math.exp(alpha * math.log(k)) * hx[k] * tp[k] / factorial(k) for k in range(1, n + 1)]
    pre = math.exp(2 * pt.x * pt.t - pt.t * pt.t)
    rhs = [pre * stirling_function_real(alpha, k) * hxt[k] * tp[k] for k in range(n + 1)]
    return lhs, rhs


def _eq1_terms(pt: EvalPoint, n: int) -> tuple[Terms, Terms]:
    tp = _powers(pt.t, n)
    hx = hermite_values(n, pt.x)
    return [hx[k] * tp[k] / factorial(k) for k in range(n + 1)], [math.exp(2 * pt.x * pt.t - pt.t ** 2)]


def _bilinear_terms(pt: EvalPoint, n: int) -> Terms:
    tp = _powers(pt.t, n)
    hx, hz = hermite_values(n, pt.x), hermite_values(n, pt.z)
    return [hx[k] * hz[k] * tp[k] / factorial(k) for k in range(n + 1)]


def mehler_closed_form(x: float, z: float, t: float) -> float:
    d = 1 - 4 * t * t
    return math.exp(x * x - (x - 2 * z * t) ** 2 / d) / math.sqrt(d)


def _free_parameter_terms(pt: EvalPoint, n: int) -> Terms:
    x, y, z, t = pt.x, pt.y, pt.z, pt.t
    tp = _powers(t, n)
    ha = hermite_values(n, x - 2 * y * t)
    hb = hermite_values(n, z - y)
    pre = math.exp(4 * x * y * t - 4 * y * y * t * t)
    return [pre * ha[k] * hb[k] * tp[k] / factorial(k) for k in range(n + 1)]


def _mehler_terms(pt: EvalPoint, n: int) -> tuple[Terms, Terms]:
    return _bilinear_terms(pt, n), [mehler_closed_form(pt.x, pt.z, pt.t)]


_CUSTOM: dict[str, Callable[[EvalPoint, int], tuple[Terms, Terms]]] = {
    "EQ1": _eq1_terms,
    "EQ39": lambda pt, n: (_bilinear_terms(pt, n), _free_parameter_terms(pt, n)),
    "EQ40-MEHLER": _mehler_terms,
    "EQ41": lambda pt, n: ([mehler_closed_form(pt.x, pt.z, pt.t)], _free_parameter_terms(pt, n)),
}


def _exact_terms(record: IdentityRecord, pt: EvalPoint, n: int) -> tuple[Terms, Terms]:
    env = pt.env()
    tp = _powers(pt.t, n)

    def side(builder):
        s = builder(n)
        return [poly_value(c, env) * tp[k] if c else 0.0 for k, c in enumerate(s.coeffs)]

    return side(record.lhs), side(record.rhs)


def identity_terms(record: IdentityRecord, pt: EvalPoint, n: int) -> tuple[Terms, Terms]:
    if record.id == "EQ53" and pt.alpha is not None:
        return _eq53_real_terms(pt, n)
    if record.id in _CUSTOM:
        return _CUSTOM[record.id](pt, n)
    if record.hermite_form is not None:
        return _hermite_form_terms(record, pt, n)
    return _exact_terms(record, pt, n)


# ---------------------------------------------------------------------------
# public API


def _default_registry() -> Registry:
    from .catalog import register_all

    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = register_all()
    return _REGISTRY


_REGISTRY: Registry | None = None


def eval_identity(ident: str, point: EvalPoint, registry: Registry | None = None) -> tuple[float, float, float]:
    """(lhs, rhs, |lhs - rhs|) summed to ``point.truncation``."""
    record = (registry or _default_registry()).lookup(ident)
    point.check()
    lhs, rhs = identity_terms(record, point, point.truncation)
    a, b = fsum(lhs), fsum(rhs)
    return a, b, abs(a - b)


def eval_exact(ident: str, point: EvalPoint, registry: Registry | None = None) -> tuple[float, float]:
    """Both sides from exact coefficients, summed exactly at the rationalized
    point and converted to float once.  Oracle for the float evaluators."""
    record = (registry or _default_registry()).lookup(ident)
    point.check()
    values = {s: from_float(v) for s, v in point.env().items()}
    t = from_float(point.t)
    n = point.truncation

    def side(builder):
        total = Q(0)
        tk = Q(1)
        for c in builder(n).coeffs:
            if c:
                total += c.substitute(**values).scalar() * tk
            tk *= t
        return float(total)

    return side(record.lhs), side(record.rhs)


@dataclass(frozen=True)
class AccelReport:
    identity: str
    point: EvalPoint
    tol: float
    lhs_terms_to_tol: int | None
    rhs_terms_to_tol: int | None

    @property
    def lhs_converged(self) -> bool:
        return self.lhs_terms_to_tol is not None

    @property
    def rhs_converged(self) -> bool:
        return self.rhs_terms_to_tol is not None


def terms_to_tolerance(terms: Sequence[float], reference: float, tol: float, limit: int) -> int | None:
    """Smallest k <= limit such that every partial sum of k..limit terms is
    within ``tol`` of ``reference``; None if even ``limit`` terms are not."""
    limit = min(limit, len(terms))
    partial = [0.0]
    for k in range(limit):
        partial.append(fsum(terms[: k + 1]))
    best = None
    for k in range(limit, -1, -1):
        if abs(partial[k] - reference) < tol:
            best = k
        else:
            break
    return best


def measure_acceleration(ident: str, point: EvalPoint, tol: float,
                         registry: Registry | None = None) -> AccelReport:
    record = (registry or _default_registry()).lookup(ident)
    point.check()
    n = max(point.truncation, REFERENCE_TRUNCATION)
    lhs, rhs = identity_terms(record, point, n)
    lhs_ref = fsum(lhs[: REFERENCE_TRUNCATION + 1])
    rhs_ref = fsum(rhs[: REFERENCE_TRUNCATION + 1])
    limit = point.truncation + 1
    return AccelReport(
        ident, point, tol,
        terms_to_tolerance(lhs, lhs_ref, tol, limit),
        terms_to_tolerance(rhs, rhs_ref, tol, limit),
    )


# ---------------------------------------------------------------------------
# CSV


EVAL_COLUMNS = ("identity", "x", "y", "z", "t", "truncation", "lhs", "rhs", "absdiff")
ACCEL_COLUMNS = ("tol", "lhs_terms_to_tol", "rhs_terms_to_tol", "lhs_converged", "rhs_converged")


def eval_rows(ids: Iterable[str], points: Iterable[EvalPoint], tol: float | None = None,
              registry: Registry | None = None) -> list[dict]:
    points = list(points)
    rows = []
    for ident in ids:
        for pt in points:
            lhs, rhs, diff = eval_identity(ident, pt, registry)
            row = {"identity": ident, "x": pt.x, "y": pt.y, "z": pt.z, "t": pt.t,
                   "truncation": pt.truncation, "lhs": lhs, "rhs": rhs, "absdiff": diff}
            if tol is not None:
                acc = measure_acceleration(ident, pt, tol, registry)
                row.update(tol=tol, lhs_terms_to_tol=acc.lhs_terms_to_tol,
                           rhs_terms_to_tol=acc.rhs_terms_to_tol,
                           lhs_converged=acc.lhs_converged, rhs_converged=acc.rhs_converged)
            rows.append(row)
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    columns = list(EVAL_COLUMNS)
    if rows and "tol" in rows[0]:
        columns += ACCEL_COLUMNS
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in columns})
    return buf.getvalue()
