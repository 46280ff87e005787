from fractions import Fraction

import pytest
from hypothesis import given, settings

from quasikernel.errors import ContractViolation, InputError
from quasikernel.graph import (
    Graph,
    complete_graph,
    empty_graph,
    neighborhood,
    path_graph,
)
from quasikernel.lp import (
    IS,
    VC,
    HalfIntegralSolution,
    extremal_lp_is,
    half_flip,
    lp_is_from_vc,
    lp_vc_opt,
    surplus_violator,
    surplus_violator_bruteforce,
)
from quasikernel.oracles import all_mis_enum, lp_is_optimum_enum

from conftest import graphs

EDGE = path_graph(2)


@pytest.mark.parametrize("n, value", [(4, 2), (2, 1), (6, 3), (8, 4)])
def test_lp_vc_of_cliques(n, value):
    # K_{2d+2} has LP_VC = d + 1
    sol = lp_vc_opt(complete_graph(n))
    assert sol.sense == VC
    assert sol.value == value
    assert sol.is_feasible(complete_graph(n))


def test_lp_is_from_vc_examples():
    k4 = lp_is_from_vc(lp_vc_opt(complete_graph(4)))
    assert k4.sense == IS and k4.value == 2
    single = lp_is_from_vc(HalfIntegralSolution({0: 0}, VC))
    assert single.doubled == {0: 2} and single.value == 1
    p3 = lp_vc_opt(path_graph(3))
    assert p3.value == 1
    assert lp_is_from_vc(p3).value == 2


def test_lp_is_from_vc_rejects_wrong_sense():
    with pytest.raises(InputError):
        lp_is_from_vc(HalfIntegralSolution({0: 2}, IS))


def test_extremal_examples():
    p3 = extremal_lp_is(path_graph(3))
    assert p3.doubled == {0: 2, 1: 0, 2: 2}
    assert p3.v1 == {0, 2} and p3.v0 == {1}
    k3 = extremal_lp_is(complete_graph(3))
    assert k3.value == Fraction(3, 2)
    assert k3.v0 == k3.v1 == frozenset()
    assert extremal_lp_is(empty_graph(1)).doubled == {0: 2}


def test_surplus_violator_examples():
    assert surplus_violator(empty_graph(2), HalfIntegralSolution({0: 2, 1: 2}, IS)) is None
    sol = HalfIntegralSolution({0: 2, 1: 0}, IS)
    assert surplus_violator(EDGE, sol) == {1}
    assert surplus_violator_bruteforce(EDGE, sol) == {1}
    flipped = half_flip(EDGE, sol, {1})
    assert flipped.doubled == {0: 1, 1: 1} and flipped.value == 1
    assert surplus_violator(path_graph(3), extremal_lp_is(path_graph(3))) is None


def test_surplus_violator_rejects_non_optimal():
    with pytest.raises(ContractViolation):
        surplus_violator(EDGE, HalfIntegralSolution({0: 0, 1: 0}, IS))


def test_values_outside_half_integral_rejected():
    with pytest.raises(InputError):
        HalfIntegralSolution({0: 3}, VC)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_vc_plus_is_equals_n(g):
    vc = lp_vc_opt(g)
    opt, _ = lp_is_optimum_enum(g)
    assert vc.is_feasible(g)
    assert vc.value + opt == g.n


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_extremal_solution_properties(g):
    sol = extremal_lp_is(g)
    opt, optima = lp_is_optimum_enum(g)
    assert sol.is_feasible(g)
    assert sol.value == opt
    assert surplus_violator_bruteforce(g, sol) is None
    assert neighborhood(g, sol.v1) == sol.v0
    for mis in all_mis_enum(g):
        assert sol.v1 <= mis and not (mis & sol.v0)
    # no optimum half-integral point has a strictly larger V_1/2
    pos = g.bit_index()
    half = [pos[v] for v in sol.vhalf]
    is_half = optima == 1
    bigger = is_half[:, half].all(axis=1) & (is_half.sum(axis=1) > len(half))
    assert not bigger.any()


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_matching_and_enumeration_violators_agree(g):
    sol = lp_is_from_vc(lp_vc_opt(g))
    fast = surplus_violator(g, sol)
    slow = surplus_violator_bruteforce(g, sol)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast and fast <= sol.v0
        assert len(neighborhood(g, fast) & sol.v1) <= len(fast)
        flipped = half_flip(g, sol, fast)
        assert flipped.is_feasible(g)
        assert flipped.value >= sol.value
        assert sol.vhalf < flipped.vhalf


def test_feasibility_requires_all_vertices():
    g = Graph.from_edges(2, [(0, 1)])
    assert not HalfIntegralSolution({0: 2}, IS).is_feasible(g)
