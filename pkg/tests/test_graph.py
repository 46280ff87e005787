import pytest
from hypothesis import given

from quasikernel.errors import InputError
from quasikernel.graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_acyclic,
    is_bipartite,
    is_independent_set,
    neighborhood,
    path_graph,
    remove_vertices,
    shortest_cycle,
)

from conftest import graph_and_subset, graphs

P3 = path_graph(3)


def test_neighborhood_examples():
    assert neighborhood(P3, {1}) == {0, 2}
    assert neighborhood(P3, {0, 2}) == {1}
    assert neighborhood(P3, set()) == frozenset()


def test_neighborhood_rejects_unknown_vertex():
    with pytest.raises(InputError):
        neighborhood(P3, {7})


def test_remove_vertices_examples():
    g = remove_vertices(P3, {1})
    assert g.vertices == (0, 2) and g.m == 0
    assert remove_vertices(complete_graph(4), {0}).edges == {(1, 2), (1, 3), (2, 3)}
    c4 = remove_vertices(cycle_graph(4), {0, 2})
    assert c4.vertices == (1, 3) and c4.m == 0


def test_components_examples():
    assert [c.vertices for c in connected_components(P3)] == [(0, 1, 2)]
    assert [c.vertices for c in connected_components(remove_vertices(P3, {1}))] == [(0,), (2,)]
    union = disjoint_union(complete_graph(3), complete_graph(4))
    comps = connected_components(union)
    assert [c.n for c in comps] == [3, 4]
    assert [c.m for c in comps] == [3, 6]


def test_is_independent_set_examples():
    assert not is_independent_set(complete_graph(3), {0, 1})
    assert is_independent_set(P3, {0, 2})
    assert is_independent_set(complete_graph(5), set())


@pytest.mark.parametrize(
    "edges",
    [[(0, 0)], [(0, 5)]],
)
def test_invalid_edges_rejected(edges):
    with pytest.raises(InputError):
        Graph.from_edges(3, edges)


def test_duplicate_edge_rejected():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_subgraph_keeps_labels():
    g = remove_vertices(path_graph(6), {0, 3})
    comps = connected_components(g)
    assert [c.vertices for c in comps] == [(1, 2), (4, 5)]
    # sets found in a component are valid in the parent
    assert neighborhood(path_graph(6), comps[1].vertices) == {3}


def test_cycle_helpers():
    assert shortest_cycle(path_graph(5)) is None
    cyc = shortest_cycle(disjoint_union(cycle_graph(6), complete_graph(3)))
    assert sorted(cyc) == [6, 7, 8]
    assert is_acyclic(path_graph(4)) and not is_acyclic(cycle_graph(4))
    assert is_bipartite(cycle_graph(6)) and not is_bipartite(cycle_graph(5))
    assert empty_graph(0).n == 0


@given(graph_and_subset())
def test_neighborhood_disjoint_from_set(data):
    g, s = data
    assert not (neighborhood(g, s) & s)


@given(graph_and_subset(), graph_and_subset())
def test_remove_vertices_composes(a, b):
    g, s = a
    t = b[1] & set(g.vertices)
    once = remove_vertices(remove_vertices(g, s), t - s)
    assert once == remove_vertices(g, s | t)


@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    assert sum(c.n for c in comps) == g.n
    assert sum(c.m for c in comps) == g.m
    for i, a in enumerate(comps):
        for b in comps[i + 1 :]:
            assert not neighborhood(g, a.vertices) & set(b.vertices)
    assert [c.vertices[0] for c in comps] == sorted(c.vertices[0] for c in comps)


@given(graphs(max_n=8))
def test_shortest_cycle_is_a_cycle(g):
    cyc = shortest_cycle(g)
    if cyc is None:
        assert is_acyclic(g)
        return
    assert len(cyc) >= 3 and len(set(cyc)) == len(cyc)
    for u, v in zip(cyc, cyc[1:] + cyc[:1]):
        assert g.has_edge(u, v)
