import itertools

import pytest
from hypothesis import strategies as st

from steinerpath.digraph import Digraph


@st.composite
def digraphs(draw, min_n=2, max_n=6, symmetric=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2)) if symmetric else list(itertools.permutations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs = [p for p, keep in zip(pairs, mask) if keep]
    if symmetric:
        arcs += [(v, u) for u, v in arcs]
    return Digraph(n, arcs)


def cycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def bistar(leaves):
    """Bidirected star with center 0."""
    return Digraph(leaves + 1, [a for v in range(1, leaves + 1) for a in ((0, v), (v, 0))])


@pytest.fixture
def c5():
    return cycle(5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
