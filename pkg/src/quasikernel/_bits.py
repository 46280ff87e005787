"""Bitmask independent-set kernels used by the exact solvers and oracles.

``adj`` is a list of neighbor bitmasks indexed by bit position.
"""

from __future__ import annotations

import numpy as np


class AlphaSolver:
    """Memoized branch-and-reduce independence number over vertex masks."""

    def __init__(self, adj: list[int]):
        self.adj = adj
        self.closed = [a | (1 << i) for i, a in enumerate(adj)]
        self.memo: dict[int, int] = {0: 0}

    def __call__(self, cand: int) -> int:
        memo = self.memo
        if cand in memo:
            return memo[cand]
        adj = self.adj
        best_v = -1
        best_deg = -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            deg = (adj[v] & cand).bit_count()
            if deg <= 1:
                # a vertex of degree <= 1 is in some maximum independent set
                result = 1 + self(cand & ~self.closed[v])
                memo[cand] = result
                return result
            if deg > best_deg:
                best_v, best_deg = v, deg
        v = best_v
        result = max(self(cand & ~(1 << v)), 1 + self(cand & ~self.closed[v]))
        memo[cand] = result
        return result


def all_maximum_independent_sets(adj: list[int]) -> tuple[int, list[int]]:
    """Independence number and every maximum independent set, as masks."""
    n = len(adj)
    solve = AlphaSolver(adj)
    full = (1 << n) - 1
    target = solve(full)
    closed = solve.closed
    out: list[int] = []

    def rec(cand: int, chosen: int, size: int) -> None:
        if size + solve(cand) < target:
            return
        if cand == 0:
            out.append(chosen)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~closed[v], chosen | low, size + 1)
        rec(cand & ~low, chosen, size)

    rec(full, 0, 0)
    return target, out


def alpha_table(adj: list[int]) -> np.ndarray:
    """alpha(G[mask]) for every mask in ``range(2**n)``."""
    n = len(adj)
    table = np.zeros(1 << n, dtype=np.int8)
    for k in range(n):
        size = 1 << k
        low = np.arange(size, dtype=np.int64)
        keep = ~adj[k] & (size - 1)
        with_k = table[low & keep] + 1
        table[size : 2 * size] = np.maximum(table[:size], with_k)
    return table
