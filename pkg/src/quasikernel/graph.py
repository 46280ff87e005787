"""Immutable simple undirected graphs with label-preserving subgraph views.

A root graph has vertices ``0..n-1``. Induced subgraphs keep the labels of
their parent, so vertex sets computed on a component can be used directly
against the whole graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    _adj: dict[int, frozenset[int]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        vset = set(verts)
        adj: dict[int, set[int]] = {v: set() for v in verts}
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u not in vset or v not in vset:
                raise InputError(f"edge ({u}, {v}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Root graph on ``0..n-1``; duplicate edges are rejected."""
        edges = [tuple(e) for e in edges]
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        return cls(tuple(range(n)), frozenset(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def adj(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.adj(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj(u)

    def check_vertices(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        bad = [v for v in s if v not in self._adj]
        if bad:
            raise InputError(f"vertices {sorted(bad)} not in graph")
        return s

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = self.check_vertices(keep)
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return Graph(tuple(sorted(keep)), edges)

    # bitmask view: bit i stands for self.vertices[i]

    def bit_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def adjacency_masks(self) -> list[int]:
        idx = self.bit_index()
        return [sum(1 << idx[u] for u in self._adj[v]) for v in self.vertices]

    def to_mask(self, s: Iterable[int]) -> int:
        idx = self.bit_index()
        mask = 0
        for v in self.check_vertices(s):
            mask |= 1 << idx[v]
        return mask

    def from_mask(self, mask: int) -> frozenset[int]:
        return frozenset(v for i, v in enumerate(self.vertices) if mask >> i & 1)


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Relabel each graph after the previous ones and take the union."""
    edges = []
    offset = 0
    for g in graphs:
        pos = g.bit_index()
        edges.extend((pos[u] + offset, pos[v] + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Open neighborhood N(s): vertices outside s adjacent to some member of s."""
    s = g.check_vertices(s)
    out = set()
    for v in s:
        out |= g.adj(v)
    return frozenset(out - s)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = g.check_vertices(s)
    return neighborhood(g, s) | s


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    s = g.check_vertices(s)
    return g.induced(v for v in g.vertices if v not in s)


def connected_components(g: Graph) -> list[Graph]:
    """Components ordered by their smallest label."""
    seen: set[int] = set()
    out = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj(u):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(g.induced(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    s = g.check_vertices(s)
    return all(not (g.adj(v) & s) for v in s)


def is_acyclic(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def two_coloring(g: Graph) -> dict[int, int] | None:
    """Proper 2-coloring (0/1 per vertex), or None if g has an odd cycle."""
    color: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of a short cycle (BFS-shortest per root), or None for a forest.

    Ties go to the cycle discovered from the smallest BFS root.
    """
    best: list[int] | None = None
    for root in g.vertices:
        parent = {root: None}
        dist = {root: 0}
        queue = deque([root])
        found = None
        while queue and found is None:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in sorted(g.adj(u)):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    found = (u, w)
                    break
        if found is None:
            continue
        u, w = found
        up_u = [u]
        while parent[up_u[-1]] is not None:
            up_u.append(parent[up_u[-1]])
        up_w = [w]
        while parent[up_w[-1]] is not None:
            up_w.append(parent[up_w[-1]])
        common = set(up_u) & set(up_w)
        left = []
        for v in up_u:
            left.append(v)
            if v in common:
                break
        right = []
        for v in up_w:
            if v in common:
                break
            right.append(v)
        cycle = left + right[::-1]
        if best is None or len(cycle) < len(best):
            best = cycle
    return best
