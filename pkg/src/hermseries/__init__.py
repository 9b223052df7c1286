"""Exact verification of Hermite-series identities.

Core pieces: exact rationals and sparse polynomials in x, y, z, p
(:mod:`.mpoly`), truncated power series in t (:mod:`.series`), number
sequences and polynomial families, the binomial / Euler / Hermite / Stirling
transforms, a catalog of identities with an exact runner, and a
floating-point shadow for numeric spot checks.
"""
from __future__ import annotations

from .errors import (
    ContractViolation,
    HermSeriesError,
    RegistryConfigError,
    SeriesDomainError,
    UnknownIdentityError,
    UnknownSymbolError,
)
from .mpoly import MPoly, P, X, Y, Z
from .rational import Q, Rational
from .series import TSeries
from .catalog import register_all
from .registry import IdentityRecord, IdentityReport, Registry, SuiteReport

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "HermSeriesError",
    "IdentityRecord",
    "IdentityReport",
    "MPoly",
    "P",
    "Q",
    "Rational",
    "Registry",
    "RegistryConfigError",
    "SeriesDomainError",
    "SuiteReport",
    "TSeries",
    "UnknownIdentityError",
    "UnknownSymbolError",
    "X",
    "Y",
    "Z",
    "register_all",
]
