"""Maximum bipartite matching (augmenting paths) and the Koenig construction.

Left and right vertices may be any hashable values. Left vertices are
processed in the order given and neighbor lists in their stored order, so
results are reproducible.
"""

from __future__ import annotations

import sys
from collections import deque
from typing import Hashable, Mapping, Sequence


def max_bipartite_matching(
    left: Sequence[Hashable], adj: Mapping[Hashable, Sequence[Hashable]]
) -> dict:
    """Maximum matching as a dict left -> right."""
    match_left: dict = {}
    match_right: dict = {}
    limit = sys.getrecursionlimit()
    if len(left) * 2 + 100 > limit:
        sys.setrecursionlimit(len(left) * 2 + 100)

    def augment(u, seen: set) -> bool:
        for w in adj.get(u, ()):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or augment(match_right[w], seen):
                match_left[u] = w
                match_right[w] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return match_left


def alternating_reach(
    left: Sequence[Hashable],
    adj: Mapping[Hashable, Sequence[Hashable]],
    matching: Mapping,
) -> tuple[set, set]:
    """Vertices reachable from unmatched left vertices by alternating paths.

    Returns (left_reached, right_reached). For a maximum matching the left
    part is a Hall violator whenever some left vertex is unmatched.
    """
    match_right = {w: u for u, w in matching.items()}
    reach_left = {u for u in left if u not in matching}
    reach_right: set = set()
    queue = deque(reach_left)
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w in reach_right:
                continue
            reach_right.add(w)
            mate = match_right.get(w)
            if mate is not None and mate not in reach_left:
                reach_left.add(mate)
                queue.append(mate)
    return reach_left, reach_right


def konig_cover(
    left: Sequence[Hashable],
    adj: Mapping[Hashable, Sequence[Hashable]],
    matching: Mapping,
) -> tuple[set, set]:
    """Minimum vertex cover (left part, right part) from a maximum matching."""
    reach_left, reach_right = alternating_reach(left, adj, matching)
    return {u for u in left if u not in reach_left}, reach_right
