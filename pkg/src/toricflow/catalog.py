"""Closed-form reduced Groebner bases and cost vectors that produce them."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MarkedBinomial, TermOrder
from .errors import ConsistencyError, InvalidInputError
from .graph import build_tournament, fundamental_matrices
from .ideals import engine_gb
from .linalg import lp_feasible


def _mono(g, *arcs):
    m = [0] * g.n
    for a in arcs:
        m[g.index[a]] += 1
    return tuple(m)


def gb_type1(d):
    """x_ij x_jk - x_ik and x_ik x_jl - x_il x_jk."""
    if d < 3:
        return set()
    g = build_tournament(d)
    out = set()
    for i, j, k in itertools.combinations(range(1, d + 1), 3):
        out.add(MarkedBinomial(_mono(g, (i, j), (j, k)), _mono(g, (i, k))))
    for i, j, k, l in itertools.combinations(range(1, d + 1), 4):
        out.add(MarkedBinomial(_mono(g, (i, k), (j, l)), _mono(g, (i, l), (j, k))))
    return out


def gb_type2(d):
    if d < 3:
        return set()
    g = build_tournament(d)
    out = set()
    for i, j, k in itertools.combinations(range(1, d + 1), 3):
        out.add(MarkedBinomial(_mono(g, (i, j), (j, k)), _mono(g, (i, k))))
    for i, j, k, l in itertools.combinations(range(1, d + 1), 4):
        out.add(MarkedBinomial(_mono(g, (i, l), (j, k)), _mono(g, (i, k), (j, l))))
    return out


def gb_type3(d):
    """Each chord against the path it skips."""
    if d < 3:
        return set()
    g = build_tournament(d)
    out = set()
    for i, j in g.arcs:
        if j > i + 1:
            path = [(t, t + 1) for t in range(i, j)]
            out.add(MarkedBinomial(_mono(g, (i, j)), _mono(g, *path)))
    return out


def dual_gb(d):
    """g_i = (product of arcs into i) - (product of arcs out of i), i = 2..d."""
    g = build_tournament(d)
    out = set()
    for i in range(2, d + 1):
        into = [(j, i) for j in range(1, i)]
        out_of = [(i, k) for k in range(i + 1, d + 1)]
        out.add(MarkedBinomial(_mono(g, *into), _mono(g, *out_of)))
    return out


def lex_perm(kind, d):
    """Variable priority of the pure lexicographic orders behind each type."""
    g = build_tournament(d)
    keys = {
        "type1": lambda a: (a[0], a[1]),
        "type2": lambda a: (a[1] - a[0], a[0]),
        "type3": lambda a: (a[0], -a[1]),
    }
    if kind not in keys:
        raise InvalidInputError(f"no lexicographic order for {kind!r}")
    return tuple(sorted(range(g.n), key=lambda k: keys[kind](g.arcs[k])))


@dataclass(frozen=True)
class CostVector:
    values: tuple
    kind: str

    def order(self):
        return TermOrder(self.values)


def _cost(d, kind, rule):
    g = build_tournament(d)
    c = CostVector(tuple(Fraction(rule(i, j)) for i, j in g.arcs), kind)
    if not VALIDATORS[kind](d, c.values):
        raise ConsistencyError(f"generated {kind} cost fails its own hypotheses")
    return c


def cost_type1(d):
    return _cost(d, "type1", lambda i, j: (j - i) * (2 * d - (j - i)))


def cost_type2(d):
    return _cost(d, "type2", lambda i, j: (j - i) ** 2 + d * d)


def cost_type3(d):
    return _cost(d, "type3", lambda i, j: 1 if j == i + 1 else (j - i) ** 2)


def dual_cost_decreasing(d):
    return _cost(d, "dual-decreasing", lambda i, j: 2 * (d - i) if j == i + 1 else 0)


def _at(d, c):
    g = build_tournament(d)
    return lambda i, j: c[g.index[(i, j)]]


def is_type1(d, c):
    x = _at(d, c)
    V = range(1, d + 1)
    tri = all(x(i, j) + x(j, k) > x(i, k) for i, j, k in itertools.combinations(V, 3))
    quad = all(
        x(i, k) + x(j, l) > x(i, l) + x(j, k) for i, j, k, l in itertools.combinations(V, 4)
    )
    return tri and quad


def is_type2(d, c):
    x = _at(d, c)
    V = range(1, d + 1)
    tri = all(x(i, j) + x(j, k) > x(i, k) for i, j, k in itertools.combinations(V, 3))
    quad = all(
        x(i, l) + x(j, k) > x(i, k) + x(j, l) for i, j, k, l in itertools.combinations(V, 4)
    )
    return tri and quad


def is_type3(d, c):
    x = _at(d, c)
    return all(
        x(i, j) > sum(x(t, t + 1) for t in range(i, j))
        for i in range(1, d + 1)
        for j in range(i + 2, d + 1)
    )


def is_dual_decreasing(d, c):
    x = _at(d, c)
    g = build_tournament(d)
    tree = [x(i, i + 1) for i in range(1, d)]
    chords_zero = all(x(i, j) == 0 for i, j in g.arcs if j > i + 1)
    return chords_zero and all(a > b for a, b in zip(tree, tree[1:]))


VALIDATORS = {
    "type1": is_type1,
    "type2": is_type2,
    "type3": is_type3,
    "dual-decreasing": is_dual_decreasing,
}


def tree_part(d, btilde):
    """Tree-arc components of the representative with zero chord part.

    Adding a fundamental circuit row leaves the order on the dual fibers
    unchanged, so the chord components can always be cleared.
    """
    g = build_tournament(d)
    b = [Fraction(x) for x in btilde]
    if len(b) != g.n:
        raise InvalidInputError(f"b~ needs {g.n} entries, got {len(b)}")
    out = []
    for t in range(1, d):
        val = b[g.index[(t, t + 1)]]
        for i, j in g.arcs:
            if j > i + 1 and i <= t < j:
                val += b[g.index[(i, j)]]
        out.append(val)
    return out


def validate_dual_cost(d, btilde):
    """(ok, witness): whether (M I) a = b~_B has a solution a >= 0.

    The witness is indexed like the columns of the fundamental matrices
    (non-tree arcs first, then tree arcs).  When b~_B >= 0 it is
    (0, b~_B) itself.
    """
    g = build_tournament(d)
    fm = fundamental_matrices(g)
    bB = tree_part(d, btilde)
    chords = len(fm.columns) - (d - 1)
    if all(x >= 0 for x in bB):
        return True, tuple([Fraction(0)] * chords + bB)
    res = lp_feasible([list(r) for r in fm.cutsetMatrix], bB)
    if res.feasible:
        return True, res.x
    return False, None


def closed_form(which, d):
    table = {"type1": gb_type1, "type2": gb_type2, "type3": gb_type3, "dual": dual_gb}
    if which not in table:
        raise InvalidInputError(f"unknown closed form {which!r}")
    return table[which](d)


def catalog_cost(which, d):
    table = {
        "type1": cost_type1,
        "type2": cost_type2,
        "type3": cost_type3,
        "dual": dual_cost_decreasing,
    }
    if which not in table:
        raise InvalidInputError(f"unknown cost family {which!r}")
    return table[which](d)


def verify_catalog(d, which, method="universal"):
    """Compare the engine basis under the family's cost with the closed form."""
    cost = catalog_cost(which, d)
    side = "dual" if which == "dual" else "primal"
    G = engine_gb(side, d, cost.order(), method=method)
    expected = closed_form(which, d)
    got = set(G.elements)
    return {
        "d": d,
        "which": which,
        "equal": got == expected,
        "engine_size": len(got),
        "closed_form_size": len(expected),
        "missing": len(expected - got),
        "extra": len(got - expected),
    }
