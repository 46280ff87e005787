from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ClassCheckError, InputError
from .exact import check_class_tag, recognize_class
from .graph import Graph, connected_components, remove_vertices


@dataclass(frozen=True)
class Instance:
    """Independent Set instance (G, X, k) with G - X a d-quasi-<class_tag> graph.

    ``k`` is the independent-set target. Reduction steps may drive it to zero
    or below, meaning the answer is trivially yes.
    """

    graph: Graph
    modulator: frozenset[int]
    k: int
    d: int
    class_tag: str

    def __post_init__(self):
        object.__setattr__(self, "modulator", self.graph.check_vertices(self.modulator))
        check_class_tag(self.class_tag)
        if self.d < 0:
            raise InputError("d must be non-negative")

    def rest(self) -> Graph:
        """G - X."""
        return remove_vertices(self.graph, self.modulator)

    def components(self) -> list[Graph]:
        return connected_components(self.rest())

    def with_(self, **changes) -> "Instance":
        return replace(self, **changes)


def validate_instance(inst: Instance) -> None:
    """Raise unless 0 <= k <= n and every component of G - X is in the class."""
    if not 0 <= inst.k <= inst.graph.n:
        raise InputError(f"k={inst.k} outside 0..{inst.graph.n}")
    for comp in inst.components():
        ok, _ = recognize_class(comp, inst.d, inst.class_tag)
        if not ok:
            raise ClassCheckError(
                f"component {list(comp.vertices)} of G - X is not "
                f"{inst.d}-{inst.class_tag}"
            )
