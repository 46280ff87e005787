"""Seeded instance generators.

Components are a random tree or bipartite base plus at most d extra
vertices wired into it, so the extra vertices form a feedback vertex set
(resp. odd cycle transversal). Modulator vertices come first (labels
0..|X|-1), followed by the components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .blocking import minimal_blocking_masks
from .errors import InputError
from .exact import (
    QUASI_BIPARTITE,
    QUASI_FOREST,
    QUASI_INTEGRAL,
    alpha,
    check_class_tag,
    recognize_class,
)
from .graph import (
    Graph,
    complete_graph,
    connected_components,
    disjoint_union,
    remove_vertices,
)
from .instance import Instance, validate_instance

CLIQUE_GADGET = "clique-gadget"
STAR_OF_TRIANGLES = "star-of-triangles"
KINDS = (QUASI_FOREST, QUASI_BIPARTITE, QUASI_INTEGRAL, CLIQUE_GADGET, STAR_OF_TRIANGLES)

BLOCKING_WIRE_CAP = 16


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    component_count: int = 4
    component_size: int = 5
    modulator_size: int = 2
    d: int = 1
    edge_density_to_X: float = 0.2
    seed: int = 0
    class_tag: str | None = None  # class declared for gadget kinds
    modulator_density: float = 0.3
    blocking_wire_probability: float = 0.5
    k_offset: int | None = None

    def declared_class(self) -> str:
        if self.kind in (QUASI_FOREST, QUASI_BIPARTITE, QUASI_INTEGRAL):
            return self.kind
        return check_class_tag(self.class_tag or QUASI_FOREST)


def _random_tree_edges(size: int, rng: random.Random) -> list[tuple[int, int]]:
    return [(rng.randrange(i), i) for i in range(1, size)]


def _wire_extras(base_size: int, extras: int, rng: random.Random, edges: list) -> None:
    for j in range(extras):
        v = base_size + j
        k = rng.randint(1, min(base_size, 4))
        for u in rng.sample(range(base_size), k):
            edges.append((u, v))
        for w in range(base_size, v):
            if rng.random() < 0.5:
                edges.append((w, v))


def _extra_count(size: int, d: int, rng: random.Random) -> int:
    top = min(d, size - 1)
    return top if rng.random() < 0.75 else rng.randint(0, top)


def random_quasi_forest(size: int, d: int, rng: random.Random) -> Graph:
    extras = _extra_count(size, d, rng)
    base = size - extras
    edges = _random_tree_edges(base, rng)
    _wire_extras(base, extras, rng, edges)
    return Graph.from_edges(size, edges)


def random_quasi_bipartite(size: int, d: int, rng: random.Random) -> Graph:
    extras = _extra_count(size, d, rng)
    base = size - extras
    tree = _random_tree_edges(base, rng)
    side = [0] * base
    for u, v in tree:
        side[v] = 1 - side[u]
    edges = set(tree)
    p = rng.uniform(0.0, 0.5)
    for u, v in combinations(range(base), 2):
        if side[u] != side[v] and (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    edges = sorted(edges)
    _wire_extras(base, extras, rng, edges)
    return Graph.from_edges(size, edges)


def _random_connected(size: int, p: float, rng: random.Random) -> Graph:
    edges = set(_random_tree_edges(size, rng))
    for u, v in combinations(range(size), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(size, sorted(edges))


def random_quasi_integral(size: int, d: int, rng: random.Random, attempts: int = 60) -> Graph:
    """Rejection-sample a connected graph with vc - LP_VC <= d.

    Falls back to a quasi-bipartite component, which is always d-quasi-integral.
    """
    for _ in range(attempts):
        g = _random_connected(size, rng.uniform(0.05, 0.9), rng)
        if recognize_class(g, d, QUASI_INTEGRAL)[0]:
            return g
    return random_quasi_bipartite(size, d, rng)


def random_component(kind: str, size: int, d: int, rng: random.Random) -> Graph:
    if size < 1:
        raise InputError("component_size must be positive")
    if kind == QUASI_FOREST:
        return random_quasi_forest(size, d, rng)
    if kind == QUASI_BIPARTITE:
        return random_quasi_bipartite(size, d, rng)
    if kind == QUASI_INTEGRAL:
        return random_quasi_integral(size, d, rng)
    raise InputError(f"no random component for kind {kind!r}")


def star_of_triangles(d: int) -> Graph:
    """Star with d leaves and a triangle hung on each leaf."""
    edges = []
    for i in range(d):
        leaf, a, b = 1 + 3 * i, 2 + 3 * i, 3 + 3 * i
        edges += [(0, leaf), (leaf, a), (a, b), (b, leaf)]
    return Graph.from_edges(1 + 3 * d, edges)


def _check_spec(spec: GeneratorSpec) -> None:
    if spec.kind not in KINDS:
        raise InputError(f"unknown generator kind {spec.kind!r}")
    if min(spec.component_count, spec.modulator_size, spec.d) < 0:
        raise InputError("counts and d must be non-negative")
    if spec.kind in (QUASI_FOREST, QUASI_BIPARTITE, QUASI_INTEGRAL):
        if spec.component_size < spec.d + 1:
            raise InputError(
                f"component_size {spec.component_size} < d + 1 = {spec.d + 1}"
            )
    for name in ("edge_density_to_X", "modulator_density", "blocking_wire_probability"):
        if not 0.0 <= getattr(spec, name) <= 1.0:
            raise InputError(f"{name} must lie in [0, 1]")


def generate(spec: GeneratorSpec) -> Instance:
    _check_spec(spec)
    rng = random.Random(spec.seed)
    tag = spec.declared_class()
    if spec.kind == CLIQUE_GADGET:
        size = 2 * spec.d + 2 if tag == QUASI_INTEGRAL else spec.d + 2
        parts = [complete_graph(size) for _ in range(spec.component_count)]
    elif spec.kind == STAR_OF_TRIANGLES:
        parts = [star_of_triangles(spec.d) for _ in range(spec.component_count)]
    else:
        parts = [
            random_component(spec.kind, spec.component_size, spec.d, rng)
            for _ in range(spec.component_count)
        ]
    s = spec.modulator_size
    body = disjoint_union(*parts)
    edges = [(u + s, v + s) for u, v in body.edges]
    for a, b in combinations(range(s), 2):
        if rng.random() < spec.modulator_density:
            edges.append((a, b))
    offset = s
    for part in parts:
        wired = set()
        if s:
            for v in range(part.n):
                for x in range(s):
                    if rng.random() < spec.edge_density_to_X:
                        wired.add((x, v + offset))
            if part.n <= BLOCKING_WIRE_CAP and rng.random() < spec.blocking_wire_probability:
                masks = minimal_blocking_masks(part)
                if masks:
                    y = rng.choice(masks)
                    x = rng.randrange(s)
                    wired |= {(x, v + offset) for v in range(part.n) if y >> v & 1}
        edges.extend(sorted(wired))
        offset += part.n
    g = Graph.from_edges(offset, edges)
    rest = remove_vertices(g, range(s))
    base_alpha = sum(alpha(c) for c in connected_components(rest))
    if spec.k_offset is None:
        bump = rng.randint(0, min(s, 2))
    else:
        bump = spec.k_offset
    k = max(0, min(g.n, base_alpha + bump))
    inst = Instance(g, frozenset(range(s)), k, spec.d, tag)
    validate_instance(inst)
    return inst

