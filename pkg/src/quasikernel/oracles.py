"""Brute-force reference routines for desk-scale verification.

Nothing here shares code paths with the algorithms it is used to check:
independence numbers are recomputed by plain subset enumeration, LP optima
by enumerating every half-integral assignment.
"""

from __future__ import annotations

from functools import lru_cache
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import CapExceeded
from .graph import Graph, is_acyclic, is_bipartite, remove_vertices

LP_CAP = 13
SUBSET_CAP = 20


def alpha_enum(g: Graph) -> int:
    """Independence number by scanning subsets from largest size down."""
    if g.n > SUBSET_CAP:
        raise CapExceeded(g.n, SUBSET_CAP)
    verts = g.vertices
    for size in range(g.n, 0, -1):
        for s in combinations(verts, size):
            ss = set(s)
            if all(not (g.adj(v) & ss) for v in s):
                return size
    return 0


def all_mis_enum(g: Graph) -> list[frozenset[int]]:
    a = alpha_enum(g)
    out = []
    for s in combinations(g.vertices, a):
        ss = set(s)
        if all(not (g.adj(v) & ss) for v in s):
            out.append(frozenset(s))
    return out


@lru_cache(maxsize=None)
def _assignments(n: int) -> np.ndarray:
    grid = np.indices((3,) * n, dtype=np.int8).reshape(n, -1).T
    return np.ascontiguousarray(grid)


def lp_is_optimum_enum(g: Graph) -> tuple[Fraction, np.ndarray]:
    """LP_IS optimum over half-integral points, and all optimal points.

    Rows of the returned array are doubled assignments in ``g.vertices`` order.
    """
    if g.n > LP_CAP:
        raise CapExceeded(g.n, LP_CAP)
    if g.n == 0:
        return Fraction(0), np.zeros((1, 0), dtype=np.int8)
    a = _assignments(g.n)
    pos = g.bit_index()
    ok = np.ones(len(a), dtype=bool)
    for u, v in g.edges:
        ok &= a[:, pos[u]] + a[:, pos[v]] <= 2
    feasible = a[ok]
    sums = feasible.sum(axis=1, dtype=np.int64)
    best = int(sums.max())
    return Fraction(best, 2), feasible[sums == best]


def lp_vc_optimum_enum(g: Graph) -> Fraction:
    value, _ = lp_is_optimum_enum(g)
    return g.n - value


def max_matching_enum(g: Graph) -> int:
    """Maximum matching size of a general graph by exhaustive recursion."""
    edges = sorted(g.edges)

    def rec(i: int, used: frozenset) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        best = rec(i + 1, used)
        if u not in used and v not in used:
            best = max(best, 1 + rec(i + 1, used | {u, v}))
        return best

    return rec(0, frozenset())


def is_blocking_enum(g: Graph, y) -> bool:
    return alpha_enum(g) > alpha_enum(remove_vertices(g, y))


def is_minimal_blocking_enum(g: Graph, y) -> bool:
    """Minimality checked against every proper subset, not just the |y|-1 ones."""
    y = sorted(y)
    if not is_blocking_enum(g, y):
        return False
    return not any(
        is_blocking_enum(g, sub)
        for size in range(len(y))
        for sub in combinations(y, size)
    )


def min_fvs_size_enum(g: Graph) -> int:
    for size in range(g.n + 1):
        for s in combinations(g.vertices, size):
            if is_acyclic(remove_vertices(g, s)):
                return size
    return g.n


def min_oct_size_enum(g: Graph) -> int:
    for size in range(g.n + 1):
        for s in combinations(g.vertices, size):
            if is_bipartite(remove_vertices(g, s)):
                return size
    return g.n
