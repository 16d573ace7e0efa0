import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from toricflow.algebra import compare
from toricflow.errors import InfeasibleError, InvalidBasisError, InvalidInputError
from toricflow.graph import build_tournament, incidence_matrix
from toricflow.linalg import matvec
from toricflow.solver import (
    FlowInstance,
    conti_traverso,
    feasible_flow,
    oracle_optimum,
    reduced_cost,
    solve_by_standard_pairs,
    solve_instance,
    tree_flow,
)
from toricflow.suite import random_instance

EXAMPLE = FlowInstance(3, (4, 5, -9), (3, 1, 2))


def _enumerate_flows(inst):
    """Every nonnegative integral flow, by exhaustive search."""
    g = build_tournament(inst.d)
    A = incidence_matrix(g)
    top = sum(v for v in inst.b if v > 0)
    for x in itertools.product(range(top + 1), repeat=g.n):
        if matvec(A, x) == list(inst.b):
            yield x


def _brute_optimum(inst):
    best = None
    for x in _enumerate_flows(inst):
        if best is None or compare(x, best, inst.order()) < 0:
            best = x
    return best


def test_example():
    assert conti_traverso(EXAMPLE).x == (0, 4, 5)
    assert conti_traverso(EXAMPLE).objective == 14
    res = solve_by_standard_pairs(EXAMPLE)
    assert res.x == (0, 4, 5)
    assert oracle_optimum(EXAMPLE).x == (0, 4, 5)


def test_feasible_flow():
    x = feasible_flow(EXAMPLE)
    assert min(x) >= 0
    assert matvec(incidence_matrix(build_tournament(3)), x) == [4, 5, -9]


@pytest.mark.parametrize("b,prefix", [((-1, 0, 1), 1), ((2, -3, 1), 2), ((1, 1, 1), None)])
def test_infeasible(b, prefix):
    inst = FlowInstance(3, b, (1, 1, 1))
    for method in ("ct", "pairs", "oracle"):
        with pytest.raises(InfeasibleError) as err:
            solve_instance(inst, method)
        assert err.value.prefix == prefix


def test_bad_instances():
    with pytest.raises(InvalidInputError):
        FlowInstance(3, (1, -1), (1, 1, 1))
    with pytest.raises(InvalidInputError):
        FlowInstance(3, (1, 0, -1), (1, 1))
    with pytest.raises(InvalidInputError):
        solve_instance(EXAMPLE, "simplex")


@pytest.mark.parametrize("d", [3, 4])
def test_against_exhaustive_search(d):
    rng = random.Random(d)
    n = comb(d, 2)
    for _ in range(15):
        b = [rng.randint(0, 3) for _ in range(d - 1)]
        b.append(-sum(b))
        inst = FlowInstance(d, b, tuple(rng.randint(1, 9) for _ in range(n)))
        want = _brute_optimum(inst)
        assert conti_traverso(inst).x == want
        assert oracle_optimum(inst).x == want
        assert solve_by_standard_pairs(inst).objective == inst.cost(want)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_three_solvers_agree(d):
    rng = random.Random(1000 + d)
    for _ in range(15):
        inst = random_instance(d, rng)
        objs = {f(inst).objective for f in (conti_traverso, solve_by_standard_pairs, oracle_optimum)}
        assert len(objs) == 1


def test_pairs_examined_first_is_optimal_for_generic_cost():
    assert solve_by_standard_pairs(EXAMPLE).pairs_examined == 1


def test_negative_costs():
    inst = FlowInstance(4, (2, 1, 0, -3), (-3, 5, 1, -2, 4, 0))
    assert conti_traverso(inst).objective == oracle_optimum(inst).objective == inst.cost(_brute_optimum(inst))


def test_tree_flow():
    assert tree_flow(3, [(1, 3), (2, 3)], (4, 5, -9)) == {(1, 3): 4, (2, 3): 5}
    assert tree_flow(3, [(1, 2), (1, 3)], (4, 5, -9))[(1, 2)] == -5


def test_reduced_cost_example():
    r = reduced_cost((1, 2), (4, 0, 9), 3)
    assert r.values == (4, 5) and r.identity_holds


def test_reduced_cost_bad_sigma():
    with pytest.raises(InvalidBasisError):
        reduced_cost((0,), (4, 0, 9), 3)
    with pytest.raises(InvalidBasisError):
        reduced_cost((1, 2), (0,) * 6, 4)
    with pytest.raises(InvalidBasisError):
        reduced_cost((0, 1, 3), (1,) * 6, 4)  # the triangle 1-2-3


@pytest.mark.parametrize("d", [3, 4, 5])
def test_reduced_cost_is_tree_solution(d):
    """For b~ a flow with supplies b, reduced costs are the tree flow for b."""
    rng = random.Random(d)
    g = build_tournament(d)
    A = incidence_matrix(g)
    for _ in range(10):
        bt = [rng.randint(0, 9) for _ in range(g.n)]
        b = matvec(A, bt)
        for sigma in itertools.combinations(range(g.n), d - 1):
            arcs = [g.arcs[k] for k in sigma]
            try:
                r = reduced_cost(sigma, bt, d)
            except InvalidBasisError:
                continue  # sigma holds a cycle
            flow = tree_flow(d, arcs, b)
            assert r.identity_holds
            assert r.values == tuple(Fraction(flow[a]) for a in arcs)
