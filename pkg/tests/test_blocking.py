import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

from quasikernel._bits import alpha_table
from quasikernel.blocking import (
    class_bound,
    enumerate_minimal_blocking_sets,
    is_blocking_set,
    is_minimal_blocking_set,
    minimal_blocking_subset,
)
from quasikernel.errors import CapExceeded, InputError
from quasikernel.exact import QUASI_BIPARTITE, QUASI_FOREST, QUASI_INTEGRAL
from quasikernel.graph import Graph, complete_graph, empty_graph, path_graph
from quasikernel.oracles import is_blocking_enum, is_minimal_blocking_enum

from conftest import graph_and_subset, graphs

K3 = complete_graph(3)
P3 = path_graph(3)


def test_is_blocking_examples():
    assert is_blocking_set(K3, {0, 1, 2})
    for pair in combinations(range(3), 2):
        assert not is_blocking_set(K3, pair)
    assert not is_blocking_set(P3, set())


@pytest.mark.parametrize("d", [0, 1, 2])
def test_clique_vertex_set_is_minimal(d):
    h = complete_graph(d + 2)
    assert is_minimal_blocking_set(h, set(h.vertices))


def test_is_minimal_examples():
    assert is_minimal_blocking_set(P3, {0})
    assert is_blocking_set(P3, {0, 2})
    assert not is_minimal_blocking_set(P3, {0, 2})


def test_enumerate_examples():
    rep = enumerate_minimal_blocking_sets(complete_graph(4), QUASI_FOREST, 2)
    assert rep.minimal_sets == [frozenset(range(4))]
    assert rep.max_minimal_size == 4 == rep.class_bound and rep.bound_respected
    rep = enumerate_minimal_blocking_sets(complete_graph(4), QUASI_INTEGRAL, 1)
    assert rep.max_minimal_size == 4 == rep.class_bound
    rep = enumerate_minimal_blocking_sets(path_graph(2), QUASI_FOREST, 0)
    assert rep.minimal_sets == [frozenset({0, 1})] and rep.bound_respected


def test_enumerate_flags_bound_breach():
    rep = enumerate_minimal_blocking_sets(complete_graph(5), bound=3)
    assert rep.max_minimal_size == 5 and not rep.bound_respected
    assert rep.as_dict()["count"] == 1


def test_class_bounds():
    assert class_bound(QUASI_FOREST, 1) == 3
    assert class_bound(QUASI_BIPARTITE, 2) == 4
    assert class_bound(QUASI_INTEGRAL, 2) == 6
    with pytest.raises(InputError):
        class_bound("quasi-planar", 1)


def test_caps_enforced():
    with pytest.raises(CapExceeded):
        is_blocking_set(empty_graph(6), {0}, cap=5)
    with pytest.raises(CapExceeded):
        enumerate_minimal_blocking_sets(empty_graph(23))


def test_empty_graph_has_no_blocking_sets():
    assert enumerate_minimal_blocking_sets(empty_graph(0)).minimal_sets == []
    # every vertex of an edgeless graph lies in the unique MIS
    rep = enumerate_minimal_blocking_sets(empty_graph(3))
    assert rep.minimal_sets == [frozenset({v}) for v in range(3)]


def test_minimal_blocking_subset_shrinks():
    y = minimal_blocking_subset(P3, {0, 1, 2})
    assert is_minimal_blocking_set(P3, y)
    with pytest.raises(InputError):
        minimal_blocking_subset(K3, {0})


@settings(max_examples=200, deadline=None)
@given(graph_and_subset(max_n=9), graph_and_subset(max_n=9))
def test_monotonicity(a, b):
    g, y = a
    extra = b[1] & set(g.vertices)
    if is_blocking_set(g, y):
        assert is_blocking_set(g, y | extra)


@settings(max_examples=200, deadline=None)
@given(graph_and_subset(max_n=8))
def test_predicates_match_oracle(data):
    g, y = data
    assert is_blocking_set(g, y) == is_blocking_enum(g, y)
    assert is_minimal_blocking_set(g, y) == is_minimal_blocking_enum(g, y)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_enumeration_matches_oracle(g):
    found = set(enumerate_minimal_blocking_sets(g).minimal_sets)
    expected = {
        frozenset(s)
        for r in range(1, g.n + 1)
        for s in combinations(g.vertices, r)
        if is_minimal_blocking_enum(g, s)
    }
    assert found == expected


def _full_minimality(g):
    """Minimal blocking masks by a subset-OR sweep over all proper subsets."""
    n = g.n
    table = alpha_table(g.adjacency_masks())
    full = (1 << n) - 1
    masks = np.arange(1 << n)
    # Y blocks iff alpha(V - Y) < alpha(V)
    blocking = table[full ^ masks] < table[full]
    below = blocking.copy()  # some subset (not necessarily proper) blocks
    for v in range(n):
        has = (masks >> v) & 1 == 1
        below[has] |= below[masks[has] ^ (1 << v)]
    proper = np.zeros_like(blocking)
    for v in range(n):
        has = (masks >> v) & 1 == 1
        proper[has] |= below[masks[has] ^ (1 << v)]
    return blocking & ~proper


def test_single_drop_shortcut_meta():
    """Single-vertex drops certify minimality: compared with a full sweep on every subset."""
    rng = random.Random(11)
    checked = 0
    for _ in range(60):
        n = rng.randint(1, 10)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        truth = _full_minimality(g)
        listed = {g.to_mask(s) for s in enumerate_minimal_blocking_sets(g).minimal_sets}
        assert listed == {int(m) for m in np.flatnonzero(truth)}
        for m in range(1, 1 << n):
            assert is_minimal_blocking_set(g, g.from_mask(m)) == bool(truth[m])
            checked += 1
    assert checked > 5000
