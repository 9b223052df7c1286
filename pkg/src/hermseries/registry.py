"""Identity records, the registry that holds them, and the verification runner."""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import ContractViolation, RegistryConfigError, UnknownIdentityError
from .series import TSeries
from .transforms import TransformReport, compare

KINDS = ("series", "gf", "finite-sum", "operator")
MAX_ORDER = 40

Builder = Callable[[int], TSeries]


@dataclass(frozen=True)
class HermiteForm:
    """Coefficient data of a record shaped like
    sum a_n H_n(x) t^n/n! = exp(2xt - t^2) sum c_n H_n(x - t) t^n w_n
    (w_n = 1/n! unless ``rhs_weight`` says otherwise).  Used by the
    floating-point evaluator."""

    a: Callable[[int], object]
    c: Callable[[int], object]
    rhs_weight: Callable[[int], object] | None = None
    lhs_offset: object = 0


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    paper_eq: str
    kind: str
    lhs: Builder
    rhs: Builder
    symbols: frozenset = frozenset()
    description: str = ""
    notes: str = ""
    default_order: int = 12
    hermite_form: HermiteForm | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RegistryConfigError(f"{self.id}: unknown kind {self.kind!r}")


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    paper_eq: str
    order: int
    transform: TransformReport
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.transform.equal

    def to_dict(self) -> dict:
        mm = self.transform.first_mismatch
        return {
            "identity": self.identity,
            "paper_eq": self.paper_eq,
            "order": self.order,
            "compared_order": self.transform.compared_order,
            "status": "pass" if self.passed else "fail",
            "first_mismatch": None
            if mm is None
            else {"power": mm.power, "lhs": str(mm.lhs), "rhs": str(mm.rhs)},
            "millis": self.millis,
        }


@dataclass
class SuiteReport:
    order: int
    reports: list[IdentityReport]
    millis: int = 0

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.reports)

    @property
    def failed(self) -> int:
        return len(self.reports) - self.passed

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "summary": {"total": self.total, "pass": self.passed, "fail": self.failed},
            "millis": self.millis,
            "reports": [r.to_dict() for r in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for r in self.reports:
            d = r.to_dict()
            line = f"{d['status'].upper():4}  {d['identity']:<14} {d['paper_eq']:<12} order={d['order']} compared={d['compared_order']}"
            if d["first_mismatch"]:
                mm = d["first_mismatch"]
                line += f"  first mismatch at t^{mm['power']}: lhs={mm['lhs']} rhs={mm['rhs']}"
            lines.append(line)
        lines.append(f"{self.passed}/{self.total} passed")
        return "\n".join(lines)


REPORT_KEYS = ("identity", "paper_eq", "order", "compared_order", "status", "first_mismatch", "millis")


def validate_report_dict(d: dict) -> None:
    """Raise ValueError unless ``d`` follows the per-identity report schema."""
    if tuple(d) != REPORT_KEYS:
        raise ValueError(f"report keys {tuple(d)} != {REPORT_KEYS}")
    for key in ("identity", "paper_eq"):
        if not isinstance(d[key], str):
            raise ValueError(f"{key} must be a string")
    for key in ("order", "compared_order", "millis"):
        if not isinstance(d[key], int) or isinstance(d[key], bool):
            raise ValueError(f"{key} must be an integer")
    if d["status"] not in ("pass", "fail"):
        raise ValueError("status must be pass or fail")
    mm = d["first_mismatch"]
    if (mm is None) != (d["status"] == "pass"):
        raise ValueError("first_mismatch must be null exactly when status is pass")
    if mm is not None:
        if set(mm) != {"power", "lhs", "rhs"} or not isinstance(mm["power"], int):
            raise ValueError("malformed first_mismatch")


def verify_record(record: IdentityRecord, order: int, timing: bool = True) -> IdentityReport:
    if order < 0:
        raise ContractViolation("order must be nonnegative")
    start = time.perf_counter()
    lhs = record.lhs(order)
    rhs = record.rhs(order)
    if lhs.order != order or rhs.order != order:
        raise ContractViolation(f"{record.id}: builder returned wrong order")
    report = compare(lhs, rhs)
    millis = int((time.perf_counter() - start) * 1000) if timing else 0
    return IdentityReport(record.id, record.paper_eq, order, report, millis)


class Registry:
    """Immutable-after-construction catalog of identity records."""

    def __init__(self, records: Iterable[IdentityRecord] = (), bibliography: dict | None = None,
                 max_order: int = MAX_ORDER):
        self._records: dict[str, IdentityRecord] = {}
        self.bibliography = dict(bibliography or {})
        self.max_order = max_order
        for rec in records:
            self.add(rec)

    def add(self, record: IdentityRecord) -> None:
        if record.id in self._records:
            raise RegistryConfigError(f"duplicate identity id {record.id!r}")
        if self.bibliography and record.paper_eq not in self.bibliography:
            raise RegistryConfigError(f"{record.id}: citation {record.paper_eq!r} not in bibliography")
        self._records[record.id] = record

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, ident: str) -> bool:
        return ident in self._records

    def ids(self) -> list[str]:
        return sorted(self._records)

    def records(self) -> list[IdentityRecord]:
        return [self._records[i] for i in self.ids()]

    def lookup(self, ident: str) -> IdentityRecord:
        try:
            return self._records[ident]
        except KeyError:
            raise UnknownIdentityError(ident) from None

    def resolve(self, ids: str | Iterable[str]) -> list[str]:
        """Expand "all" / comma lists; unknown ids raise before any work."""
        if isinstance(ids, str):
            ids = [s.strip() for s in ids.split(",") if s.strip()]
        ids = list(ids)
        if not ids or ids == ["all"]:
            return self.ids()
        unknown = [i for i in ids if i not in self._records]
        if unknown:
            raise UnknownIdentityError(", ".join(unknown))
        return sorted(set(ids))

    def verify(self, ident: str, order: int, timing: bool = True) -> IdentityReport:
        record = self.lookup(ident)
        if order > self.max_order:
            raise ContractViolation(f"order {order} exceeds the configured maximum {self.max_order}")
        return verify_record(record, order, timing)

    def verify_all(self, order: int, parallelism: int = 1, ids="all", timing: bool = True) -> SuiteReport:
        selected = self.resolve(ids)
        if order > self.max_order:
            raise ContractViolation(f"order {order} exceeds the configured maximum {self.max_order}")
        start = time.perf_counter()
        if parallelism <= 1:
            reports = [verify_record(self._records[i], order, timing) for i in selected]
        else:
            with ThreadPoolExecutor(max_workers=parallelism) as pool:
                reports = list(pool.map(lambda i: verify_record(self._records[i], order, timing), selected))
        reports.sort(key=lambda r: r.identity)
        millis = int((time.perf_counter() - start) * 1000) if timing else 0
        return SuiteReport(order, reports, millis)
