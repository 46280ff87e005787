"""Blocking sets: vertex sets whose deletion lowers the independence number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ._bits import alpha_table
from .errors import CapExceeded, InputError
from .exact import DEFAULT_CAP, QUASI_INTEGRAL, alpha, check_class_tag
from .graph import Graph, remove_vertices

ENUMERATION_CAP = 22


def class_bound(class_tag: str, d: int) -> int:
    """Largest possible minimal blocking set size in a d-quasi-<class> component."""
    check_class_tag(class_tag)
    return 2 * d + 2 if class_tag == QUASI_INTEGRAL else d + 2


@dataclass(frozen=True)
class BlockingSetReport:
    host: Graph
    minimal_sets: list[frozenset[int]]
    max_minimal_size: int
    class_bound: int | None
    bound_respected: bool

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.host.vertices),
            "minimal_sets": [sorted(s) for s in self.minimal_sets],
            "count": len(self.minimal_sets),
            "max_minimal_size": self.max_minimal_size,
            "class_bound": self.class_bound,
            "bound_respected": self.bound_respected,
        }


def is_blocking_set(h: Graph, y: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    if h.n > cap:
        raise CapExceeded(h.n, cap)
    y = h.check_vertices(y)
    if not y:
        return False
    return alpha(h) > alpha(remove_vertices(h, y))


def is_minimal_blocking_set(h: Graph, y: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    """Blocking, and no set obtained by dropping a single vertex is blocking.

    Single-vertex drops suffice because supersets of blocking sets block: a
    blocking proper subset would make some (|y|-1)-subset blocking too.
    """
    y = h.check_vertices(y)
    if not is_blocking_set(h, y, cap):
        return False
    return not any(is_blocking_set(h, y - {v}, cap) for v in y)


def minimal_blocking_masks(h: Graph) -> list[int]:
    """All minimal blocking sets of h as bitmasks over ``h.vertices``.

    Works on complements: Y is minimal blocking iff M = V - Y has
    alpha(M) < alpha(V) while adding back any single vertex of Y restores it.
    """
    n = h.n
    if n > ENUMERATION_CAP:
        raise CapExceeded(n, ENUMERATION_CAP)
    if n == 0:
        return []
    table = alpha_table(h.adjacency_masks())
    full = (1 << n) - 1
    top = table[full]
    masks = np.arange(1 << n, dtype=np.int64)
    minimal = table < top
    for v in range(n):
        bit = 1 << v
        outside = (masks & bit) == 0
        minimal &= ~outside | (table[masks | bit] == top)
    return sorted((full ^ int(m) for m in masks[minimal]), key=lambda y: (y.bit_count(), y))


def enumerate_minimal_blocking_sets(
    h: Graph, class_tag: str | None = None, d: int | None = None, bound: int | None = None
) -> BlockingSetReport:
    """Every minimal blocking set of h, checked against a size bound.

    The bound is either given directly or derived from (class_tag, d).
    """
    if bound is None and class_tag is not None:
        if d is None:
            raise InputError("class_tag needs d")
        bound = class_bound(class_tag, d)
    sets = [h.from_mask(m) for m in minimal_blocking_masks(h)]
    sets.sort(key=lambda s: (len(s), sorted(s)))
    biggest = max((len(s) for s in sets), default=0)
    return BlockingSetReport(
        host=h,
        minimal_sets=sets,
        max_minimal_size=biggest,
        class_bound=bound,
        bound_respected=bound is None or biggest <= bound,
    )


def minimal_blocking_subset(h: Graph, y: Iterable[int], cap: int = DEFAULT_CAP) -> frozenset[int]:
    """Shrink a blocking set to a minimal one by dropping vertices in label order."""
    y = h.check_vertices(y)
    if not is_blocking_set(h, y, cap):
        raise InputError("set is not blocking")
    target = alpha(h)
    keep = set(y)
    for v in sorted(y):
        trial = keep - {v}
        if alpha(remove_vertices(h, trial)) < target:
            keep = trial
    return frozenset(keep)

