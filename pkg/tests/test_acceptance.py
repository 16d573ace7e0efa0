"""Acceptance criteria, one test per criterion (exact arithmetic throughout).

Long-tier reproductions are marked slow and run with ``--runslow``.
"""

import random
from math import comb

import pytest

from toricflow.algebra import MarkedBinomial, TermOrder, initial_ideal, normal_form
from toricflow.catalog import cost_type1, cost_type3, verify_catalog
from toricflow.fan import enumerate_fan, fan_cross_check, fan_keys
from toricflow.graph import build_tournament, incidence_matrix, reduce_rows
from toricflow.ideals import engine_gb, universal
from toricflow.linalg import matvec, solve
from toricflow.pairs import (
    StandardPair,
    arithmetic_degree,
    count_pattern_trees,
    covering_check,
    standard_pairs_dual,
    standard_pairs_primal,
    verify_homog_correspondence,
)
from toricflow.solver import FlowInstance, conti_traverso, oracle_optimum, reduced_cost, solve_by_standard_pairs
from toricflow.suite import TABLE1, TABLE2, random_instance

ONE = (0, 0, 0)


def test_criterion_1_example(criterion):
    with criterion("1", "d=3 example regression", limit=1.0):
        c = TermOrder((3, 1, 2))
        G = engine_gb("primal", 3, c)
        assert G.elements == (MarkedBinomial((1, 0, 1), (0, 1, 0)),)
        assert initial_ideal(G).generators == ((1, 0, 1),)
        assert normal_form((4, 0, 9), G) == (0, 4, 5)
        p1 = standard_pairs_primal(3, (3, 1, 2))
        p2 = standard_pairs_primal(3, (1, 4, 2))
        assert p1 == [StandardPair(ONE, (0, 1)), StandardPair(ONE, (1, 2))]
        assert p2 == [StandardPair(ONE, (0, 2))]
        assert (arithmetic_degree(p1), arithmetic_degree(p2)) == (2, 1)
        inst = FlowInstance(3, (4, 5, -9), (3, 1, 2))
        assert conti_traverso(inst).x == solve_by_standard_pairs(inst).x == (0, 4, 5)
        D = engine_gb("dual", 3, TermOrder((4, 0, 9)))
        assert set(D.elements) == {MarkedBinomial((0, 0, 1), (1, 0, 0)), MarkedBinomial((1, 1, 0), (0, 0, 0))}
        assert set(initial_ideal(D).generators) == {(0, 0, 1), (1, 1, 0)}
        assert standard_pairs_dual(3, (4, 0, 9)) == [StandardPair(ONE, (0,)), StandardPair(ONE, (1,))]


def test_criterion_2_closed_forms(criterion):
    sizes = {
        "type1": lambda d: comb(d, 3) + comb(d, 4),
        "type2": lambda d: comb(d, 3) + comb(d, 4),
        "type3": lambda d: comb(d, 2) - (d - 1),
        "dual": lambda d: d - 1,
    }
    with criterion("2", "closed-form bases, d=3..7", limit=30.0):
        for d in range(3, 8):
            for which, size in sizes.items():
                r = verify_catalog(d, which)
                assert r["equal"], f"{which} d={d}: {r}"
                assert r["engine_size"] == size(d), f"{which} d={d}: size {r['engine_size']}"


def _fan_row(side, d):
    s, _ = enumerate_fan(side, d, collect=False)
    return s, (s.count, s.maxCard, s.minCard)


def test_criterion_3_primal_table(criterion):
    with criterion("3", "primal fan, d=4 and d=5"):
        for d in (4, 5):
            s, row = _fan_row("primal", d)
            assert row == TABLE1[d] and not s.partial, f"d={d}: {row}"


@pytest.mark.slow
def test_criterion_3_primal_table_d6(criterion):
    with criterion("3-long", "primal fan, d=6"):
        s, row = _fan_row("primal", 6)
        assert row == TABLE1[6] and not s.partial, f"d=6: {row}"


def test_criterion_4_dual_table(criterion):
    with criterion("4", "dual fan, d=4..6"):
        for d in (4, 5, 6):
            s, row = _fan_row("dual", d)
            assert row == TABLE2[d] and not s.partial, f"d={d}: {row}"
            assert s.cones_without_valid_cost == 0


@pytest.mark.slow
def test_criterion_4_dual_table_d7(criterion):
    with criterion("4-long", "dual fan, d=7"):
        s, row = _fan_row("dual", 7)
        assert row == TABLE2[7] and not s.partial, f"d=7: {row}"


def test_criterion_5_catalan(criterion):
    with criterion("5", "Catalan degrees and pattern trees", limit=60.0):
        for d, want in zip(range(3, 7), (2, 5, 14, 42)):
            deg = arithmetic_degree(standard_pairs_primal(d, cost_type1(d).values))
            assert deg == want, f"type1 degree at d={d} is {deg}"
            assert count_pattern_trees(d) == want, f"pattern trees at d={d}"
            assert arithmetic_degree(standard_pairs_primal(d, cost_type3(d).values)) == 1


def test_criterion_6_homogenization(criterion):
    with criterion("6", "homogenized pairs correspond, d=3,4"):
        rng = random.Random(6)
        for d in (3, 4):
            costs = [(3, 1, 2), (1, 4, 2)] if d == 3 else []
            while len(costs) < 10:
                costs.append(tuple(rng.randint(1, 60) for _ in range(comb(d, 2))))
            for c in costs:
                r = verify_homog_correspondence(d, c)
                assert r["bijection"], f"d={d} c={c}: {r}"


def test_criterion_7_solvers_agree(criterion):
    with criterion("7", "three solvers on 300 instances"):
        rng = random.Random(7)
        bad = []
        for d in range(3, 7):
            for _ in range(75):
                inst = random_instance(d, rng)
                objs = [f(inst).objective for f in (conti_traverso, solve_by_standard_pairs, oracle_optimum)]
                if len(set(objs)) != 1:
                    bad.append((inst, objs))
        assert not bad, f"{len(bad)} disagreements, first {bad[0]}"


def test_criterion_8_reduced_costs(criterion):
    from toricflow.fan import random_cost

    with criterion("8", "reduced costs solve the tree systems"):
        rng = random.Random(8)
        for d in (3, 4, 5):
            g = build_tournament(d)
            Abar = reduce_rows(incidence_matrix(g))
            for _ in range(20):
                bt = random_cost("dual", d, rng)
                b = matvec(Abar, bt)
                full = set(range(g.n))
                for p in standard_pairs_dual(d, bt):
                    sigma = tuple(sorted(full - set(p.sigma)))
                    r = reduced_cost(sigma, bt, d)
                    assert r.identity_holds, f"identity fails d={d} sigma={sigma}"
                    sol = solve([[row[k] for k in sigma] for row in Abar], b)
                    assert sol.status == "unique" and r.values == sol.x, f"d={d} sigma={sigma}"


def test_criterion_9_universal_and_cross_check(criterion):
    with criterion("9", "fan bases are circuits/cutsets; 200 samples each"):
        for side, ds in (("primal", (3, 4, 5)), ("dual", (3, 4, 5, 6))):
            for d in ds:
                summary, keys = fan_keys(side, d)
                elements = set(universal(side, d))
                for key in keys:
                    # keys index the universal set directly; orientation is the marking
                    assert all(0 <= i < len(elements) and s in (1, -1) for i, s in key)
                r = fan_cross_check(side, d, 200, seed=d, keys=keys)
                assert r["missing"] == 0, f"{side} d={d}: {r['missing']} costs outside the fan"


def test_criterion_9_bases_are_universal_elements(criterion):
    with criterion("9b", "collected bases use only universal elements"):
        for side, d in (("primal", 4), ("primal", 5), ("dual", 5), ("dual", 6)):
            _, bases = enumerate_fan(side, d)
            allowed = set(universal(side, d))
            for G in bases:
                for g in G.elements:
                    v = g.vector
                    assert v in allowed or tuple(-x for x in v) in allowed, f"{side} d={d}: {v}"


def test_criterion_10_covering(criterion):
    with criterion("10", "pairs cover standard monomials to degree 6"):
        rng = random.Random(10)
        for d in (3, 4):
            costs = [cost_type1(d).values, cost_type3(d).values]
            costs += [tuple(rng.randint(1, 50) for _ in range(comb(d, 2))) for _ in range(3)]
            for c in costs:
                assert covering_check(d, c, max_degree=6) == comb(6 + comb(d, 2), comb(d, 2))
