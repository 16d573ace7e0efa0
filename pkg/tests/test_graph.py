import itertools
from math import comb

import pytest

from toricflow.errors import InvalidDimensionError, ResourceError
from toricflow.graph import (
    build_tournament,
    circuit_binomial,
    circuit_count,
    cutset_binomial,
    cutset_vector,
    enumerate_circuits,
    enumerate_cutsets,
    enumerate_spanning_trees,
    fundamental_matrices,
    incidence_matrix,
    prufer_decode,
    reduce_rows,
    spanning_tree_masks,
)
from toricflow.linalg import matmul, matvec, rank, transpose


def _is_cycle(arcs, d):
    """Brute-force test: every touched vertex has degree 2 and they are connected."""
    deg = {}
    for i, j in arcs:
        deg[i] = deg.get(i, 0) + 1
        deg[j] = deg.get(j, 0) + 1
    if not arcs or any(v != 2 for v in deg.values()):
        return False
    start = next(iter(deg))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for i, j in arcs:
            for a, b in ((i, j), (j, i)):
                if a == v and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return seen == set(deg)


def _is_tree(arcs, d):
    parent = list(range(d + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i, j in arcs:
        a, b = find(i), find(j)
        if a == b:
            return False
        parent[a] = b
    return len(arcs) == d - 1


def test_arc_order_d4():
    g = build_tournament(4)
    assert g.arcs == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert g.label(3) == "2,3"
    assert [g.arcs[k] for k in g.tree_arcs()] == [(1, 2), (2, 3), (3, 4)]
    assert [g.arcs[k] for k in g.chord_arcs()] == [(1, 3), (1, 4), (2, 4)]


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5, "3"])
def test_bad_dimension(bad):
    with pytest.raises(InvalidDimensionError):
        build_tournament(bad)


def test_incidence_d3():
    A = incidence_matrix(build_tournament(3))
    assert A == [[1, 1, 0], [-1, 0, 1], [0, -1, -1]]
    assert reduce_rows(A) == [[1, 1, 0], [-1, 0, 1]]


@pytest.mark.parametrize("d", range(2, 8))
def test_incidence_rank(d):
    A = incidence_matrix(build_tournament(d))
    assert rank(A) == d - 1
    assert rank(reduce_rows(A)) == d - 1
    assert all(sum(col) == 0 for col in zip(*A))


@pytest.mark.parametrize("d", range(3, 7))
def test_circuits_match_brute_force(d):
    g = build_tournament(d)
    brute = set()
    for r in range(3, g.n + 1):
        for arcs in itertools.combinations(g.arcs, r):
            if _is_cycle(arcs, d):
                brute.add(frozenset(arcs))
    circuits = enumerate_circuits(g)
    supports = {frozenset(g.arcs[k] for k in c.support) for c in circuits}
    assert supports == brute
    assert len(circuits) == len(brute) == circuit_count(d)
    A = incidence_matrix(g)
    for c in circuits:
        assert matvec(A, c.coefficients) == [0] * d
        assert next(x for x in c.coefficients if x) == 1


def test_circuit_counts_frozen():
    # oracle: brute-force cycle enumeration above
    assert [circuit_count(d) for d in range(3, 8)] == [1, 7, 37, 197, 1172]


def test_circuit_d3_binomial():
    (c,) = enumerate_circuits(build_tournament(3))
    assert c.coefficients == (1, -1, 1)
    b = circuit_binomial(c)
    assert (b.plus, b.minus) == ((1, 0, 1), (0, 1, 0))


@pytest.mark.parametrize("d", range(3, 7))
def test_cutsets(d):
    g = build_tournament(d)
    cuts = enumerate_cutsets(g)
    assert len(cuts) == 2 ** (d - 1) - 1
    # cutsets are orthogonal to every circuit
    for cut in cuts:
        assert set(cut.coefficients) <= {-1, 0, 1}
        plus, minus = cut.partition
        assert plus and minus and 1 in plus
        for c in enumerate_circuits(g):
            assert sum(a * b for a, b in zip(cut.coefficients, c.coefficients)) == 0
    assert len({c.coefficients for c in cuts}) == len(cuts)


def test_cutset_binomials_d3():
    g = build_tournament(3)
    (cut,) = [c for c in enumerate_cutsets(g) if c.partition[0] == {1, 2}]
    b = cutset_binomial(cut)
    assert (b.plus, b.minus) == ((0, 1, 1), (0, 0, 0))
    assert cutset_vector(g, {1}) == (1, 1, 0)


@pytest.mark.parametrize("d", range(2, 7))
def test_spanning_trees_brute_force(d):
    g = build_tournament(d)
    brute = {frozenset(t) for t in itertools.combinations(g.arcs, d - 1) if _is_tree(t, d)}
    got = set(enumerate_spanning_trees(g))
    assert got == brute
    assert len(spanning_tree_masks(d)) == d ** (d - 2)


def test_prufer_star():
    assert sorted(prufer_decode([1, 1], 4)) == [(1, 2), (1, 3), (1, 4)]


def test_enumeration_cap():
    g = build_tournament(10)
    with pytest.raises(ResourceError):
        enumerate_circuits(g)
    with pytest.raises(ResourceError):
        enumerate_cutsets(g, cap=5)


def test_fundamental_d3():
    fm = fundamental_matrices(build_tournament(3))
    assert fm.columns == ((1, 3), (1, 2), (2, 3))
    assert fm.circuitMatrix == ((1, -1, -1),)
    assert fm.cutsetMatrix == ((1, 1, 0), (1, 0, 1))


@pytest.mark.parametrize("d", range(3, 8))
def test_fundamental_orthogonal(d):
    g = build_tournament(d)
    fm = fundamental_matrices(g)
    K, C = fm.cutsetMatrix, fm.circuitMatrix
    assert len(K) == d - 1 and len(C) == comb(d - 1, 2)
    assert matmul(K, transpose(C)) == [[0] * len(C) for _ in K]
    A = incidence_matrix(g)
    for row in fm.in_arc_order(g, C):
        assert matvec(A, row) == [0] * d
