"""Exact independence numbers, class recognizers and small deletion sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from ._bits import AlphaSolver, all_maximum_independent_sets
from .errors import CapExceeded, ContractViolation, InputError
from .graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    is_acyclic,
    is_bipartite,
    is_independent_set,
    remove_vertices,
    shortest_cycle,
    two_coloring,
)
from .lp import lp_vc_value
from .matching import max_bipartite_matching

QUASI_FOREST = "quasi-forest"
QUASI_BIPARTITE = "quasi-bipartite"
QUASI_INTEGRAL = "quasi-integral"
CLASS_TAGS = (QUASI_FOREST, QUASI_BIPARTITE, QUASI_INTEGRAL)

DEFAULT_CAP = 26
OCT_BUDGET = 2_000_000

FVS = "FVS"
OCT = "OCT"


@dataclass(frozen=True)
class DeletionSet:
    kind: str
    vertices: frozenset[int]
    host: int

    def __iter__(self):
        return iter(sorted(self.vertices))

    def __len__(self):
        return len(self.vertices)


def check_class_tag(tag: str) -> str:
    if tag not in CLASS_TAGS:
        raise InputError(f"unknown class {tag!r}; expected one of {', '.join(CLASS_TAGS)}")
    return tag


def alpha(g: Graph, cap: int | None = None) -> int:
    """Independence number by memoized branch-and-reduce."""
    if cap is not None and g.n > cap:
        raise CapExceeded(g.n, cap)
    if g.n == 0:
        return 0
    return AlphaSolver(g.adjacency_masks())((1 << g.n) - 1)


def mis_bruteforce(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, list[frozenset[int]]]:
    """alpha(g) and all maximum independent sets, sorted."""
    if g.n > cap:
        raise CapExceeded(g.n, cap)
    if g.n == 0:
        return 0, [frozenset()]
    size, masks = all_maximum_independent_sets(g.adjacency_masks())
    sets = sorted((g.from_mask(m) for m in masks), key=sorted)
    return size, sets


def maximum_independent_set(g: Graph, cap: int | None = None) -> frozenset[int]:
    """One maximum independent set (greedy reconstruction from alpha values)."""
    if cap is not None and g.n > cap:
        raise CapExceeded(g.n, cap)
    solve = AlphaSolver(g.adjacency_masks())
    cand = (1 << g.n) - 1
    target = solve(cand)
    chosen = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand & ~solve.closed[v]
        if 1 + solve(rest) == target:
            chosen |= low
            cand = rest
            target -= 1
        else:
            cand &= ~low
    return g.from_mask(chosen)


def _strip_leaves(g: Graph) -> Graph:
    """Drop vertices of degree <= 1 until none remain; cycles are unaffected."""
    while True:
        low = [v for v in g.vertices if g.degree(v) <= 1]
        if not low:
            return g
        g = remove_vertices(g, low)


def _fvs_branch(g: Graph, budget: int) -> list[frozenset[int]]:
    g = _strip_leaves(g)
    cycle = shortest_cycle(g)
    if cycle is None:
        return [frozenset()]
    if budget == 0:
        return []
    out = []
    for v in cycle:
        for rest in _fvs_branch(remove_vertices(g, [v]), budget - 1):
            out.append(rest | {v})
    return out


def find_fvs(h: Graph, d: int) -> frozenset[int] | None:
    """Lexicographically smallest minimum feedback vertex set, if it has size <= d.

    Bounded search tree: every feedback vertex set hits a short cycle, so
    branching on its vertices enumerates all minimum solutions.
    """
    for size in range(d + 1):
        found = _fvs_branch(h, size)
        if found:
            return min(found, key=lambda s: (len(s), sorted(s)))
    return None


def find_oct(h: Graph, d: int) -> frozenset[int] | None:
    """Lexicographically smallest minimum odd cycle transversal of size <= d."""
    verts = h.vertices
    tried = 0
    for size in range(d + 1):
        for s in combinations(verts, size):
            tried += 1
            if tried > OCT_BUDGET:
                raise InputError(f"odd cycle transversal search exceeds {OCT_BUDGET} subsets")
            if is_bipartite(remove_vertices(h, s)):
                return frozenset(s)
    return None


def _forest_alpha(f: Graph) -> int:
    """Two-state tree DP over each tree of a forest."""
    total = 0
    seen: set[int] = set()
    for root in f.vertices:
        if root in seen:
            continue
        order = []
        parent = {root: None}
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            order.append(u)
            for w in f.adj(u):
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    stack.append(w)
        take = {}
        skip = {}
        for u in reversed(order):
            kids = [w for w in f.adj(u) if parent.get(w) == u]
            take[u] = 1 + sum(skip[w] for w in kids)
            skip[u] = sum(max(take[w], skip[w]) for w in kids)
        total += max(take[root], skip[root])
    return total


def _bipartite_alpha(b: Graph) -> int:
    color = two_coloring(b)
    left = [v for v in b.vertices if color[v] == 0]
    adj = {v: sorted(b.adj(v)) for v in left}
    return b.n - len(max_bipartite_matching(left, adj))


def _guided_alpha(h: Graph, z: frozenset[int], solve_rest) -> int:
    best = 0
    zs = sorted(z)
    rest_base = remove_vertices(h, z)
    for size in range(len(zs) + 1):
        for s in combinations(zs, size):
            if not is_independent_set(h, s):
                continue
            blocked = closed_neighborhood(h, s) - z
            value = size + solve_rest(remove_vertices(rest_base, blocked))
            best = max(best, value)
    return best


def _vertices_of(z: DeletionSet | Iterable[int]) -> frozenset[int]:
    return z.vertices if isinstance(z, DeletionSet) else frozenset(z)


def mis_quasi_forest(h: Graph, z: DeletionSet | Iterable[int]) -> int:
    """alpha(h) from a feedback vertex set z: guess z & I, tree DP on the rest."""
    zv = h.check_vertices(_vertices_of(z))
    if not is_acyclic(remove_vertices(h, zv)):
        raise ContractViolation(f"{sorted(zv)} is not a feedback vertex set")
    return _guided_alpha(h, zv, _forest_alpha)


def mis_quasi_bipartite(h: Graph, z: DeletionSet | Iterable[int]) -> int:
    """alpha(h) from an odd cycle transversal z: guess z & I, Koenig on the rest."""
    zv = h.check_vertices(_vertices_of(z))
    if not is_bipartite(remove_vertices(h, zv)):
        raise ContractViolation(f"{sorted(zv)} is not an odd cycle transversal")
    return _guided_alpha(h, zv, _bipartite_alpha)


def recognize_class(h: Graph, d: int, class_tag: str):
    """(member, witness) for a connected graph h.

    The witness is a DeletionSet for the forest/bipartite classes and the pair
    (vc, LP_VC) for the quasi-integral class; None when no deletion set exists.
    """
    check_class_tag(class_tag)
    host = h.vertices[0] if h.n else -1
    if class_tag == QUASI_FOREST:
        z = find_fvs(h, d)
        return z is not None, None if z is None else DeletionSet(FVS, z, host)
    if class_tag == QUASI_BIPARTITE:
        z = find_oct(h, d)
        return z is not None, None if z is None else DeletionSet(OCT, z, host)
    vc = h.n - alpha(h)
    lp = lp_vc_value(h)
    return vc <= lp + d, (vc, lp)


def mis_component(h: Graph, d: int, class_tag: str, cap: int = DEFAULT_CAP) -> int:
    """alpha(h) for a component declared to be in the class."""
    ok, witness = recognize_class(h, d, class_tag)
    if not ok:
        raise ContractViolation(f"component is not {d}-{class_tag}")
    if class_tag == QUASI_FOREST:
        return mis_quasi_forest(h, witness)
    if class_tag == QUASI_BIPARTITE:
        return mis_quasi_bipartite(h, witness)
    return alpha(h, cap)


def vertex_cover_number(g: Graph) -> int:
    return g.n - sum(alpha(c) for c in connected_components(g))


def lp_gap(h: Graph) -> Fraction:
    """vc(h) - LP_VC(h)."""
    return vertex_cover_number(h) - lp_vc_value(h)
