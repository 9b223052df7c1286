from __future__ import annotations

import random

import pytest

from hermseries.catalog import register_all
from hermseries.rational import Q


@pytest.fixture(scope="session")
def registry():
    return register_all()


def random_rational(rng: random.Random, height: int = 100):
    return Q(rng.randint(-height, height), rng.randint(1, height))


def random_sequence(rng: random.Random, length: int, height: int = 100) -> list:
    return [random_rational(rng, height) for _ in range(length)]


def set_partitions(n: int):
    """Every partition of {0..n-1} as a list of blocks (restricted growth strings)."""
    if n == 0:
        yield []
        return

    def grow(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))

    for rgs in grow([0], 0):
        blocks: dict[int, list[int]] = {}
        for elem, b in enumerate(rgs):
            blocks.setdefault(b, []).append(elem)
        yield list(blocks.values())


def brute_stirling(n: int, k: int, r: int = 0) -> int:
    """Partitions of an n-set into k blocks with elements 0..r-1 in distinct blocks."""
    count = 0
    for blocks in set_partitions(n):
        if len(blocks) != k:
            continue
        if all(sum(1 for e in b if e < r) <= 1 for b in blocks):
            count += 1
    return count


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE_RESULTS: dict[int, str] = {}


@pytest.fixture
def criterion():
    """``criterion(n, passed, detail)`` records and prints one result line."""

    def record(number: int, passed: bool, detail: str) -> bool:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_RESULTS[number] = line
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[number])
