"""Conflicts, the component-deletion rule, modulator extension and LP-gap hand-off.

Instances are Independent Set instances (G, X, k). The class budget b is the
maximum size of a minimal blocking set in a component: d + 2 for
quasi-forests and quasi-bipartite graphs, 2d + 2 for quasi-integral graphs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .blocking import class_bound, minimal_blocking_subset
from .errors import ClassCheckError, ContractViolation, InputError
from .exact import (
    QUASI_FOREST,
    QUASI_INTEGRAL,
    alpha,
    find_fvs,
    find_oct,
    maximum_independent_set,
    mis_quasi_bipartite,
    mis_quasi_forest,
    recognize_class,
)
from .graph import (
    Graph,
    empty_graph,
    is_acyclic,
    is_bipartite,
    is_independent_set,
    neighborhood,
    remove_vertices,
)
from .instance import Instance
from .lp import lp_vc_value

log = logging.getLogger(__name__)

AlphaFn = Callable[[Graph], int]


def class_budget(inst: Instance) -> int:
    return class_bound(inst.class_tag, inst.d)


def independent_subsets(g: Graph, x: Iterable[int], budget: int) -> list[frozenset[int]]:
    """Nonempty independent subsets of x with at most ``budget`` vertices.

    Ordered by size, then lexicographically.
    """
    xs = sorted(x)
    out = []
    for size in range(1, min(budget, len(xs)) + 1):
        for s in combinations(xs, size):
            if is_independent_set(g, s):
                out.append(frozenset(s))
    return out


def conflicts(f: Graph, x_i: Iterable[int], g: Graph, alpha_fn: AlphaFn = alpha) -> int:
    """conf_f(x_i) = alpha(f) - alpha(f - N_g(x_i))."""
    x_i = g.check_vertices(x_i)
    if not is_independent_set(g, x_i):
        raise InputError(f"{sorted(x_i)} is not independent")
    hit = neighborhood(g, x_i) & set(f.vertices)
    if not hit:
        return 0
    return alpha_fn(f) - alpha_fn(remove_vertices(f, hit))


def component_alpha_fn(h: Graph, d: int, class_tag: str) -> AlphaFn:
    """Independence number of induced subgraphs of h, using h's class structure.

    Deleting vertices keeps a feedback vertex set (or odd cycle transversal)
    valid once restricted to the survivors, so one witness serves all calls.
    """
    ok, witness = recognize_class(h, d, class_tag)
    if not ok:
        raise ClassCheckError(f"component {list(h.vertices)} is not {d}-{class_tag}")
    if class_tag == QUASI_INTEGRAL:
        return alpha
    z = witness.vertices
    solver = mis_quasi_forest if class_tag == QUASI_FOREST else mis_quasi_bipartite
    return lambda sub: solver(sub, z & set(sub.vertices))


@dataclass
class ComponentProfile:
    graph: Graph
    alpha: int
    conf: tuple[int, ...]  # aligned with ConflictTable.subsets


@dataclass
class ConflictTable:
    """conf(H, X_I) per component H of G - X and independent X_I, plus totals."""

    subsets: list[frozenset[int]]
    profiles: list[ComponentProfile]
    modulator_size: int

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(
            sum(p.conf[j] for p in self.profiles) for j in range(len(self.subsets))
        )

    def certificate(self, index: int, totals: tuple[int, ...] | None = None):
        """First X_I with conf(H, X_I) > 0 and conf(G - H - X, X_I) < |X|, or None."""
        totals = self.totals if totals is None else totals
        prof = self.profiles[index]
        for j, c in enumerate(prof.conf):
            if c > 0 and totals[j] - c < self.modulator_size:
                return j
        return None

    def as_rows(self) -> list[dict]:
        return [
            {
                "component": list(p.graph.vertices),
                "alpha": p.alpha,
                "conflicts": {
                    ",".join(map(str, sorted(s))): c
                    for s, c in zip(self.subsets, p.conf)
                    if c
                },
            }
            for p in self.profiles
        ]


class ConflictCache:
    """Component profiles keyed by vertex set; survive across deletions."""

    def __init__(self, inst: Instance):
        self.graph = inst.graph
        self.d = inst.d
        self.class_tag = inst.class_tag
        self.modulator = inst.modulator
        self.subsets = independent_subsets(inst.graph, inst.modulator, class_budget(inst))
        self._nbrs = [neighborhood(inst.graph, s) for s in self.subsets]
        self._cache: dict[frozenset[int], ComponentProfile] = {}

    def profile(self, h: Graph) -> ComponentProfile:
        key = frozenset(h.vertices)
        prof = self._cache.get(key)
        if prof is None:
            alpha_fn = component_alpha_fn(h, self.d, self.class_tag)
            a = alpha_fn(h)
            conf = []
            for hit in self._nbrs:
                hit = hit & key
                conf.append(a - alpha_fn(remove_vertices(h, hit)) if hit else 0)
            prof = ComponentProfile(h, a, tuple(conf))
            self._cache[key] = prof
        return prof

    def table(self, components: list[Graph]) -> ConflictTable:
        return ConflictTable(
            self.subsets, [self.profile(h) for h in components], len(self.modulator)
        )


def build_conflict_table(inst: Instance) -> ConflictTable:
    return ConflictCache(inst).table(inst.components())


def deletable_component(inst: Instance, h: Graph, table: ConflictTable | None = None):
    """(deletable, certificate) for component h of G - X.

    The certificate is the independent X_I that keeps h, or None when h is
    deletable.
    """
    table = build_conflict_table(inst) if table is None else table
    keys = [frozenset(p.graph.vertices) for p in table.profiles]
    try:
        index = keys.index(frozenset(h.vertices))
    except ValueError:
        raise InputError("h is not a component of G - X") from None
    j = table.certificate(index)
    if j is None:
        return True, None
    return False, table.subsets[j]


def shrink_conflict_witness(
    g: Graph, h: Graph, x_i: Iterable[int], budget: int
) -> frozenset[int]:
    """A subset of x_i with at most ``budget`` vertices that still conflicts with h.

    Takes a minimal blocking set inside N(x_i) & V(h) and keeps one
    x_i-neighbor (the smallest label) per blocking vertex.
    """
    x_i = g.check_vertices(x_i)
    if conflicts(h, x_i, g) <= 0:
        raise ContractViolation("x_i has no conflict with h")
    hit = neighborhood(g, x_i) & set(h.vertices)
    core = minimal_blocking_subset(h, hit)
    chosen = frozenset(min(g.adj(y) & x_i) for y in core)
    if len(chosen) > budget:
        raise ContractViolation(
            f"minimal blocking set of size {len(core)} exceeds budget {budget}"
        )
    return chosen


@dataclass(frozen=True)
class Deletion:
    vertices: tuple[int, ...]
    alpha_credit: int

    def as_dict(self) -> dict:
        return {"vertices": list(self.vertices), "alpha_credit": self.alpha_credit}


def rule1_steps(inst: Instance) -> Iterator[tuple[Instance, Deletion]]:
    """Yield (instance after deletion, deletion) for each application of the rule.

    Always deletes the deletable component with the smallest label, then
    rescans.
    """
    cache = ConflictCache(inst)
    comps = inst.components()
    graph = inst.graph
    k = inst.k
    while True:
        table = cache.table(comps)
        totals = table.totals
        pick = next(
            (i for i in range(len(comps)) if table.certificate(i, totals) is None), None
        )
        if pick is None:
            return
        h = comps.pop(pick)
        credit = table.profiles[pick].alpha
        graph = remove_vertices(graph, h.vertices)
        k -= credit
        yield inst.with_(graph=graph, k=k), Deletion(h.vertices, credit)


@dataclass
class KernelReport:
    class_tag: str
    d: int
    budget: int
    n_before: int
    k_before: int
    modulator_before: int
    components_before: int
    deleted_components: list[Deletion] = field(default_factory=list)
    n_after: int = 0
    k_after: int = 0
    components_after: int = 0
    component_bound: int = 0
    component_bound_ok: bool = True
    surviving: list[dict] = field(default_factory=list)
    certificates_ok: bool = True
    max_blocked_per_subset: int = 0
    blocked_per_subset_ok: bool = True
    modulator_after: int | None = None
    modulator_bound: int | None = None
    modulator_bound_ok: bool | None = None
    remainder_ok: bool | None = None
    above_lp_gap: dict | None = None
    trivially_yes: bool = False
    output: dict | None = None

    @property
    def credit_total(self) -> int:
        return sum(dl.alpha_credit for dl in self.deleted_components)

    def checks(self) -> dict[str, bool]:
        """Every bound check that applies to this run."""
        out = {
            "k_accounting": self.k_after == self.k_before - self.credit_total,
            "component_bound": self.component_bound_ok,
            "certificates": self.certificates_ok,
            "blocked_per_subset": self.blocked_per_subset_ok,
        }
        if self.modulator_bound_ok is not None:
            out["modulator_bound"] = self.modulator_bound_ok
        if self.remainder_ok is not None:
            out["remainder_class"] = self.remainder_ok
        if self.above_lp_gap is not None and self.above_lp_gap["status"] == "gap":
            out["above_lp_gap"] = self.above_lp_gap["within_bound"]
        return out

    def all_ok(self) -> bool:
        return all(self.checks().values())

    def as_dict(self) -> dict:
        return {
            "class": self.class_tag,
            "d": self.d,
            "budget": self.budget,
            "before": {
                "n": self.n_before,
                "k": self.k_before,
                "modulator": self.modulator_before,
                "components": self.components_before,
            },
            "deleted_components": [dl.as_dict() for dl in self.deleted_components],
            "alpha_credit_total": self.credit_total,
            "after": {
                "n": self.n_after,
                "k": self.k_after,
                "components": self.components_after,
                "modulator": self.modulator_after,
            },
            "bounds": {
                "component_bound": self.component_bound,
                "modulator_bound": self.modulator_bound,
                "max_blocked_per_subset": self.max_blocked_per_subset,
            },
            "surviving": self.surviving,
            "above_lp_gap": self.above_lp_gap,
            "trivially_yes": self.trivially_yes,
            "checks": self.checks(),
            "output": self.output,
        }


def _audit_survivors(inst: Instance, report: KernelReport) -> None:
    table = build_conflict_table(inst)
    totals = table.totals
    size_x = len(inst.modulator)
    blocked = [0] * len(table.subsets)
    for i, prof in enumerate(table.profiles):
        j = table.certificate(i, totals)
        if j is None:
            report.certificates_ok = False
            report.surviving.append({"vertices": list(prof.graph.vertices), "certificate": None})
            continue
        report.surviving.append(
            {
                "vertices": list(prof.graph.vertices),
                "certificate": sorted(table.subsets[j]),
                "conf_component": prof.conf[j],
                "conf_rest": totals[j] - prof.conf[j],
            }
        )
        for jj, c in enumerate(prof.conf):
            if c > 0 and totals[jj] - c < size_x:
                blocked[jj] += 1
    report.max_blocked_per_subset = max(blocked, default=0)
    report.blocked_per_subset_ok = report.max_blocked_per_subset <= size_x


def apply_rule1_exhaustively(inst: Instance) -> tuple[Instance, KernelReport]:
    budget = class_budget(inst)
    comps = inst.components()
    report = KernelReport(
        class_tag=inst.class_tag,
        d=inst.d,
        budget=budget,
        n_before=inst.graph.n,
        k_before=inst.k,
        modulator_before=len(inst.modulator),
        components_before=len(comps),
    )
    current = inst
    for current, deletion in rule1_steps(inst):
        report.deleted_components.append(deletion)
    size_x = len(inst.modulator)
    report.n_after = current.graph.n
    report.k_after = current.k
    report.components_after = len(current.components())
    report.component_bound = size_x ** (budget + 1)
    report.component_bound_ok = report.components_after <= report.component_bound
    _audit_survivors(current, report)
    return current, report


def modulator_bound(inst: Instance, original_modulator_size: int | None = None) -> int:
    """d * |X|^(b+1) + |X|."""
    size_x = len(inst.modulator) if original_modulator_size is None else original_modulator_size
    return inst.d * size_x ** (class_budget(inst) + 1) + size_x


def extend_modulator(inst: Instance) -> Instance:
    """Add a minimum FVS (or OCT) of every component of G - X to X.

    The result has d = 0: G - X is a forest (or bipartite). Quasi-integral
    instances are returned unchanged.
    """
    if inst.class_tag == QUASI_INTEGRAL:
        log.info("quasi-integral instance: modulator extension skipped, use above_lp_gap")
        return inst
    finder = find_fvs if inst.class_tag == QUASI_FOREST else find_oct
    extra: set[int] = set()
    for h in inst.components():
        z = finder(h, inst.d)
        if z is None:
            raise ClassCheckError(f"component {list(h.vertices)} is not {inst.d}-{inst.class_tag}")
        extra |= z
    return inst.with_(modulator=inst.modulator | extra, d=0)


@dataclass(frozen=True)
class GapResult:
    """Outcome of the above-LP hand-off for quasi-integral instances.

    ``status`` is "solved" when X plus a minimum vertex cover of G - X already
    meets the vertex cover target; ``cover`` then holds that cover.
    """

    status: str
    vc_target: int
    lp_value: Fraction
    gap: Fraction | None
    bound: int
    within_bound: bool | None
    cover: frozenset[int] | None = None

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "vc_target": self.vc_target,
            "lp_vc": str(self.lp_value),
            "gap": None if self.gap is None else str(self.gap),
            "bound": self.bound,
            "within_bound": self.within_bound,
            "cover": None if self.cover is None else sorted(self.cover),
        }


def above_lp_gap(inst: Instance) -> GapResult:
    """k_vc - LP_VC(G) for the vertex cover target k_vc = n - k.

    The bound |X| + d * |X|^(2d+3) applies once the trivial cover
    X + vc(G - X) no longer meets the target.
    """
    if inst.class_tag != QUASI_INTEGRAL:
        raise InputError("above_lp_gap applies to quasi-integral instances")
    g = inst.graph
    vc_target = g.n - inst.k
    size_x = len(inst.modulator)
    bound = size_x + inst.d * size_x ** (2 * inst.d + 3)
    lp = lp_vc_value(g)
    comps = inst.components()
    rest_vc = sum(h.n - alpha(h) for h in comps)
    if vc_target >= rest_vc + size_x:
        cover = set(inst.modulator)
        for h in comps:
            cover |= set(h.vertices) - maximum_independent_set(h)
        return GapResult("solved", vc_target, lp, None, bound, None, frozenset(cover))
    gap = vc_target - lp
    return GapResult("gap", vc_target, lp, gap, bound, gap <= bound)


def _trivial_output(inst: Instance) -> Instance:
    return Instance(empty_graph(0), frozenset(), 0, inst.d, inst.class_tag)


def kernelize(inst: Instance) -> tuple[Instance, KernelReport]:
    """Rule 1 to exhaustion, then modulator extension or the LP-gap hand-off.

    A reduced target k <= 0 (or a solved gap check) yields the empty yes-instance.
    """
    reduced, report = apply_rule1_exhaustively(inst)
    out = reduced
    if reduced.k <= 0:
        report.trivially_yes = True
    elif inst.class_tag == QUASI_INTEGRAL:
        gap = above_lp_gap(reduced)
        report.above_lp_gap = gap.as_dict()
        report.trivially_yes = gap.status == "solved"
    else:
        out = extend_modulator(reduced)
        report.modulator_after = len(out.modulator)
        report.modulator_bound = modulator_bound(inst)
        report.modulator_bound_ok = report.modulator_after <= report.modulator_bound
        rest = out.rest()
        report.remainder_ok = is_acyclic(rest) if inst.class_tag == QUASI_FOREST else is_bipartite(rest)
    if report.trivially_yes:
        out = _trivial_output(inst)
    report.output = {
        "n": out.graph.n,
        "m": out.graph.m,
        "k": out.k,
        "d": out.d,
        "modulator": len(out.modulator),
    }
    return out, report
