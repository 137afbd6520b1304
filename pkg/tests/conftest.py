from __future__ import annotations

import random
import time

import pytest

from rbgsb.algebra import AlgebraContext


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def ctx1():
    return AlgebraContext.from_names(["x"], 1)


@pytest.fixture
def ctx2():
    return AlgebraContext.from_names(["x1", "x2"], 1)


@pytest.fixture
def ctx3():
    return AlgebraContext.from_names(["x1", "x2", "x3"], 1)


# -- acceptance reporting

_CRITERIA: list[str] = []


class _Criterion:
    def __init__(self, capsys):
        self.capsys = capsys

    def __call__(self, number: int, title: str, limit: float | None = None):
        return _CriterionRun(self, number, title, limit)


class _CriterionRun:
    def __init__(self, owner, number, title, limit):
        self.owner, self.number, self.title, self.limit = owner, number, title, limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        ok = exc_type is None
        note = f"{elapsed:.2f}s"
        if self.limit is not None:
            note += f" (limit {self.limit:g}s)"
            if ok and elapsed >= self.limit:
                ok = False
                note += " too slow"
        line = f"{'PASS' if ok else 'FAIL'} criterion {self.number}: {self.title} [{note}]"
        _CRITERIA.append(line)
        with self.owner.capsys.disabled():
            print("\n" + line)
        if exc_type is None and not ok:
            pytest.fail(line)
        return False


@pytest.fixture
def criterion(capsys):
    return _Criterion(capsys)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
