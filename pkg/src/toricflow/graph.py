"""Acyclic tournament graphs and their cycle/cut structure.

Arcs are the pairs (i, j), 1 <= i < j <= d, in lexicographic order
(1,2), (1,3), ..., (1,d), (2,3), ..., (d-1,d).  Every arc-indexed vector
in the package uses this order.
"""

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import binomial_from_vector
from .errors import InvalidDimensionError, ResourceError

DEFAULT_CAP = 9


@dataclass(frozen=True)
class TournamentGraph:
    d: int
    arcs: tuple = field(init=False, repr=False, compare=False)
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arcs = tuple((i, j) for i in range(1, self.d + 1) for j in range(i + 1, self.d + 1))
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "index", {a: k for k, a in enumerate(arcs)})

    @property
    def n(self):
        return len(self.arcs)

    def tree_arcs(self):
        """Indices of the path tree (1,2), (2,3), ..., (d-1,d)."""
        return [self.index[(i, i + 1)] for i in range(1, self.d)]

    def chord_arcs(self):
        return [k for k, (i, j) in enumerate(self.arcs) if j > i + 1]

    def label(self, k):
        i, j = self.arcs[k]
        return f"{i},{j}"


def build_tournament(d):
    if not isinstance(d, int) or d < 2:
        raise InvalidDimensionError(f"need an integer d >= 2, got {d!r}")
    return _graph(d)


@lru_cache(maxsize=None)
def _graph(d):
    return TournamentGraph(d)


def incidence_matrix(g):
    A = [[0] * g.n for _ in range(g.d)]
    for k, (i, j) in enumerate(g.arcs):
        A[i - 1][k] = 1
        A[j - 1][k] = -1
    return A


def reduce_rows(A):
    """Drop the last (dependent) vertex row."""
    return [list(row) for row in A[:-1]]


def _check_cap(g, cap):
    cap = DEFAULT_CAP if cap is None else cap
    if g.d > cap:
        raise ResourceError(f"d={g.d} exceeds the enumeration cap {cap}")


@dataclass(frozen=True)
class CircuitVec:
    coefficients: tuple

    @property
    def support(self):
        return frozenset(k for k, v in enumerate(self.coefficients) if v)


@dataclass(frozen=True)
class CutsetVec:
    coefficients: tuple
    partition: tuple  # (V+, V-) as frozensets

    @property
    def support(self):
        return frozenset(k for k, v in enumerate(self.coefficients) if v)


def canonical_sign(v):
    """Flip v so its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def cycle_vector(g, cycle):
    """Signed incidence vector of a closed vertex walk (v0, ..., vk = v0)."""
    v = [0] * g.n
    for a, b in zip(cycle, cycle[1:]):
        if a < b:
            v[g.index[(a, b)]] += 1
        else:
            v[g.index[(b, a)]] -= 1
    return tuple(v)


def enumerate_circuits(g, cap=None):
    _check_cap(g, cap)
    return list(_circuits(g.d))


@lru_cache(maxsize=None)
def _circuits(d):
    g = _graph(d)
    out = []
    for k in range(3, d + 1):
        for chosen in itertools.combinations(range(1, d + 1), k):
            first, rest = chosen[0], chosen[1:]
            for perm in itertools.permutations(rest):
                # each undirected cycle once: fix the start, pick one direction
                if perm[0] > perm[-1]:
                    continue
                walk = (first,) + perm + (first,)
                out.append(CircuitVec(canonical_sign(cycle_vector(g, walk))))
    out.sort(key=lambda c: tuple(-x for x in c.coefficients))
    return tuple(out)


def circuit_count(d):
    from math import comb, factorial

    return sum(comb(d, k) * factorial(k - 1) // 2 for k in range(3, d + 1))


def cutset_vector(g, plus):
    plus = frozenset(plus)
    v = []
    for i, j in g.arcs:
        if i in plus and j not in plus:
            v.append(1)
        elif i not in plus and j in plus:
            v.append(-1)
        else:
            v.append(0)
    return tuple(v)


def enumerate_cutsets(g, cap=None):
    _check_cap(g, cap)
    return list(_cutsets(g.d))


@lru_cache(maxsize=None)
def _cutsets(d):
    g = _graph(d)
    vertices = range(1, d + 1)
    out = []
    for r in range(0, d - 1):
        for rest in itertools.combinations(range(2, d + 1), r):
            plus = frozenset((1,) + rest)
            minus = frozenset(vertices) - plus
            out.append(CutsetVec(cutset_vector(g, plus), (plus, minus)))
    return tuple(out)


def prufer_decode(seq, d):
    """Edges (i, j), i < j, of the labelled tree with Pruefer code seq."""
    degree = [1] * (d + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, d + 1) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(1, d + 1) if degree[x] == 1]
    edges.append((u, w))
    return edges


def enumerate_spanning_trees(g, cap=None):
    """Yield every spanning tree as a frozenset of arcs (i, j)."""
    _check_cap(g, cap)
    if g.d == 2:
        yield frozenset({(1, 2)})
        return
    for seq in itertools.product(range(1, g.d + 1), repeat=g.d - 2):
        yield frozenset(prufer_decode(seq, g.d))


@lru_cache(maxsize=None)
def spanning_tree_masks(d):
    """All spanning trees as sorted bitmasks over arc indices."""
    g = _graph(d)
    masks = []
    for tree in enumerate_spanning_trees(g, cap=max(d, DEFAULT_CAP)):
        masks.append(sum(1 << g.index[a] for a in tree))
    return tuple(sorted(masks))


def arcs_of_mask(g, mask):
    return [g.arcs[k] for k in range(g.n) if mask >> k & 1]


@dataclass(frozen=True)
class FundamentalMatrices:
    """Cut and cycle matrices for the path tree.

    Columns follow ``columns``: the non-tree arcs in lexicographic order,
    then the tree arcs (1,2), ..., (d-1,d).
    """

    cutsetMatrix: tuple
    circuitMatrix: tuple
    tree: tuple
    columns: tuple

    def in_arc_order(self, g, matrix):
        """Re-index the columns of one of the matrices by arc order."""
        out = []
        for row in matrix:
            v = [0] * g.n
            for col, arc in enumerate(self.columns):
                v[g.index[arc]] = row[col]
            out.append(tuple(v))
        return tuple(out)


def fundamental_matrices(g):
    chords = [g.arcs[k] for k in g.chord_arcs()]
    tree = [(i, i + 1) for i in range(1, g.d)]
    columns = tuple(chords + tree)
    cut = []
    for t in range(1, g.d):
        # cut between {1..t} and {t+1..d}
        cut.append(tuple(1 if i <= t < j else 0 for (i, j) in columns))
    cyc = []
    for (k, l) in chords:
        row = []
        for (i, j) in columns:
            if (i, j) == (k, l):
                row.append(1)
            elif j == i + 1 and k <= i < l:
                row.append(-1)
            else:
                row.append(0)
        cyc.append(tuple(row))
    return FundamentalMatrices(tuple(cut), tuple(cyc), tuple(tree), columns)


def circuit_binomial(c):
    return binomial_from_vector(c.coefficients)


def cutset_binomial(c):
    return binomial_from_vector(c.coefficients)
