import random

import pytest
from hypothesis import strategies as st

from quadpid.normsolve import build_prime_table
from quadpid.quadcore import QuadInt, field_params

CERTIFIED = (-11, -7, -3, -1, 2, 3, 5, 6, 7, 13, 14, 17, 33)
SAMPLE_M = (-163, -7, -5, -1, 2, 3, 5, 10, 13, 14, 17, 33, 94)

_ACCEPTANCE_LINES = []


def report(line: str):
    """Collect a one-line acceptance verdict for the terminal summary."""
    _ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def tables():
    cache = {}

    def get(m):
        if m not in cache:
            cache[m] = build_prime_table(field_params(m))
        return cache[m]

    return get


def random_element(rng: random.Random, field, bound=10**4):
    u = rng.randint(-bound, bound)
    v = rng.randint(-bound, bound)
    if field.one_mod_4:
        if (u - v) & 1:
            v += -1 if v > 0 else 1
    else:
        u &= ~1
        v &= ~1
    return QuadInt(u, v, field)


@st.composite
def elements(draw, field, bound=10**6):
    u = draw(st.integers(-bound, bound))
    v = draw(st.integers(-bound, bound))
    if field.one_mod_4:
        v = v - ((u - v) & 1)
    else:
        u, v = 2 * u, 2 * v
    return QuadInt(u, v, field)
