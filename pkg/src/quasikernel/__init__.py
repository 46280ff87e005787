"""Kernelization of Independent Set / Vertex Cover parameterized by a modulator
to d-quasi-forests, d-quasi-bipartite and d-quasi-integral graphs."""

from .blocking import (
    BlockingSetReport,
    class_bound,
    enumerate_minimal_blocking_sets,
    is_blocking_set,
    is_minimal_blocking_set,
)
from .errors import CapExceeded, ClassCheckError, ContractViolation, InputError, ParseError
from .exact import (
    CLASS_TAGS,
    QUASI_BIPARTITE,
    QUASI_FOREST,
    QUASI_INTEGRAL,
    DeletionSet,
    find_fvs,
    find_oct,
    mis_bruteforce,
    mis_component,
    mis_quasi_bipartite,
    mis_quasi_forest,
    recognize_class,
)
from .formats import emit_instance, parse_instance
from .generate import GeneratorSpec, generate
from .graph import (
    Graph,
    connected_components,
    is_independent_set,
    neighborhood,
    remove_vertices,
)
from .instance import Instance, validate_instance
from .kernel import (
    KernelReport,
    above_lp_gap,
    apply_rule1_exhaustively,
    conflicts,
    deletable_component,
    extend_modulator,
    kernelize,
    shrink_conflict_witness,
)
from .lp import (
    HalfIntegralSolution,
    extremal_lp_is,
    lp_is_from_vc,
    lp_vc_opt,
    surplus_violator,
)

__version__ = "0.1.0"
