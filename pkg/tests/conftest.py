from itertools import combinations

import pytest
from hypothesis import strategies as st

from quasikernel.graph import Graph

CRITERIA: list[str] = []


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_subset(draw, max_n=9):
    g = draw(graphs(max_n=max_n))
    s = draw(st.sets(st.sampled_from(g.vertices))) if g.n else set()
    return g, frozenset(s)


@pytest.fixture
def criterion_log():
    return CRITERIA


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
