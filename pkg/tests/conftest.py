"""Shared small graphs and hypothesis strategies."""
from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edpaths import (
    UNBOUNDED, Graph, Kind, LengthConstraint, ProblemInstance, at_least, at_most, exactly, gen_random,
)

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def k4() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def c4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def p(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def square() -> Graph:
    """Edges 0-1, 0-2, 2-3, 3-1: a 4-cycle whose terminals 0, 1 are adjacent."""
    return Graph(4, [(0, 1), (0, 2), (2, 3), (3, 1)])


def diamond() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


@pytest.fixture
def K4() -> Graph:
    return k4()


@pytest.fixture
def C4() -> Graph:
    return c4()


@pytest.fixture
def P5() -> Graph:
    return p(5)


@pytest.fixture
def SQUARE() -> Graph:
    return square()


def constraint(kind: Kind, k: int) -> LengthConstraint:
    return UNBOUNDED if kind is Kind.UNBOUNDED else LengthConstraint(kind, k)


@st.composite
def graphs(draw, max_n: int = 9, max_m: int = 16) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, chosen)


@st.composite
def instances(draw, max_n: int = 8, max_m: int = 14, max_k: int = 4, kinds=tuple(Kind)) -> ProblemInstance:
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(0, min(max_m, n * (n - 1) // 2)))
    rule = draw(st.sampled_from(["distinct", "coincident"] + (["crossing"] if n >= 4 and m >= 4 else [])))
    c1 = constraint(draw(st.sampled_from(kinds)), draw(st.integers(1, max_k)))
    c2 = constraint(draw(st.sampled_from(kinds)), draw(st.integers(1, max_k)))
    return gen_random(n, m, rule, c1, c2, draw(st.integers(0, 2**32)))


SUPPORTED_PAIRS = [
    (at_most, at_most), (at_most, exactly), (exactly, exactly),
    (at_most, lambda k: UNBOUNDED), (exactly, lambda k: UNBOUNDED),
    (at_most, at_least), (exactly, at_least),
]


# One line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
