"""Half-integral optima of the vertex cover / independent set LP relaxations.

Values are stored doubled (0, 1, 2 for 0, 1/2, 1) so all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import ContractViolation, InputError
from .graph import Graph, neighborhood
from .matching import alternating_reach, konig_cover, max_bipartite_matching

VC = "VC"
IS = "IS"


@dataclass(frozen=True)
class HalfIntegralSolution:
    doubled: Mapping[int, int]
    sense: str

    def __post_init__(self):
        if self.sense not in (VC, IS):
            raise InputError(f"unknown sense {self.sense!r}")
        bad = {v: x for v, x in self.doubled.items() if x not in (0, 1, 2)}
        if bad:
            raise InputError(f"values must be in {{0, 1/2, 1}}, got doubled {bad}")
        object.__setattr__(self, "doubled", dict(sorted(self.doubled.items())))

    def x(self, v: int) -> Fraction:
        return Fraction(self.doubled[v], 2)

    @property
    def value(self) -> Fraction:
        return Fraction(sum(self.doubled.values()), 2)

    def part(self, doubled_value: int) -> frozenset[int]:
        return frozenset(v for v, x in self.doubled.items() if x == doubled_value)

    @property
    def v0(self) -> frozenset[int]:
        return self.part(0)

    @property
    def vhalf(self) -> frozenset[int]:
        return self.part(1)

    @property
    def v1(self) -> frozenset[int]:
        return self.part(2)

    def is_feasible(self, g: Graph) -> bool:
        if set(self.doubled) != set(g.vertices):
            return False
        x = self.doubled
        if self.sense == VC:
            return all(x[u] + x[v] >= 2 for u, v in g.edges)
        return all(x[u] + x[v] <= 2 for u, v in g.edges)

    def as_dict(self) -> dict:
        return {
            "sense": self.sense,
            "value": str(self.value),
            "assignment": {str(v): str(self.x(v)) for v in self.doubled},
            "V0": sorted(self.v0),
            "Vhalf": sorted(self.vhalf),
            "V1": sorted(self.v1),
        }


def lp_vc_opt(g: Graph) -> HalfIntegralSolution:
    """Optimum half-integral LP_VC solution via the bipartite double cover.

    Each vertex v gets copies (v, 0) and (v, 1); every edge uv becomes
    (u,0)-(v,1) and (v,0)-(u,1). A Koenig cover of the double cover counts
    how many copies of each vertex are covered, which is twice x_v.
    """
    left = [(v, 0) for v in g.vertices]
    adj = {(v, 0): [(u, 1) for u in sorted(g.adj(v))] for v in g.vertices}
    matching = max_bipartite_matching(left, adj)
    cover_left, cover_right = konig_cover(left, adj, matching)
    doubled = {
        v: int((v, 0) in cover_left) + int((v, 1) in cover_right) for v in g.vertices
    }
    return HalfIntegralSolution(doubled, VC)


def lp_vc_value(g: Graph) -> Fraction:
    return lp_vc_opt(g).value


def lp_is_from_vc(sol: HalfIntegralSolution) -> HalfIntegralSolution:
    """Complement x -> 1 - x, turning an LP_VC solution into an LP_IS one."""
    if sol.sense != VC:
        raise InputError("expected a VC solution")
    return HalfIntegralSolution({v: 2 - x for v, x in sol.doubled.items()}, IS)


def _require_optimal_is(g: Graph, sol: HalfIntegralSolution) -> None:
    if sol.sense != IS:
        raise InputError("expected an IS solution")
    if not sol.is_feasible(g):
        raise ContractViolation("solution is not feasible for LP_IS")
    if sol.value != g.n - lp_vc_value(g):
        raise ContractViolation(
            f"solution value {sol.value} is not the LP_IS optimum {g.n - lp_vc_value(g)}"
        )


def surplus_violator(g: Graph, sol: HalfIntegralSolution) -> frozenset[int] | None:
    """A nonempty S in V0 with |N(S) & V1| <= |S|, or None.

    S exists iff for some v in V0 the bipartite graph V0 -> V1, with v
    duplicated, has no matching saturating the left side. The alternating
    reach from an unmatched copy is then a Hall violator.
    """
    _require_optimal_is(g, sol)
    v0 = sorted(sol.v0)
    v1 = sol.v1
    nbrs = {u: sorted(g.adj(u) & v1) for u in v0}
    for v in v0:
        left = [(u, 0) for u in v0] + [(v, 1)]
        adj = {copy: nbrs[copy[0]] for copy in left}
        matching = max_bipartite_matching(left, adj)
        if len(matching) == len(left):
            continue
        reach_left, _ = alternating_reach(left, adj, matching)
        return frozenset(u for u, _ in reach_left)
    return None


def surplus_violator_bruteforce(
    g: Graph, sol: HalfIntegralSolution
) -> frozenset[int] | None:
    """Subset-enumeration version of :func:`surplus_violator` (first by size, then lex)."""
    _require_optimal_is(g, sol)
    v0 = sorted(sol.v0)
    v1 = sol.v1
    for size in range(1, len(v0) + 1):
        for s in combinations(v0, size):
            if len(neighborhood(g, s) & v1) <= size:
                return frozenset(s)
    return None


def half_flip(g: Graph, sol: HalfIntegralSolution, s: Iterable[int]) -> HalfIntegralSolution:
    """Set S and N(S) & V1 to 1/2."""
    s = frozenset(s)
    if not s <= sol.v0:
        raise InputError("flip set must lie in V0")
    flip = s | (neighborhood(g, s) & sol.v1)
    doubled = dict(sol.doubled)
    for v in flip:
        doubled[v] = 1
    return HalfIntegralSolution(doubled, sol.sense)


def extremal_lp_is(g: Graph) -> HalfIntegralSolution:
    """Optimum half-integral LP_IS solution whose V_1/2 cannot be enlarged.

    Every maximum independent set I then satisfies V1 <= I <= V - V0.
    """
    sol = lp_is_from_vc(lp_vc_opt(g))
    while (s := surplus_violator(g, sol)) is not None:
        sol = half_flip(g, sol, s)
    return sol
