"""Groebner fans of the primal and dual ideals.

Cones live in reduced coordinates: the chord weights for the primal
ideal (weights are only defined modulo the row space of A, and the
chords are a complementary coordinate set), the tree weights for the dual
ideal (modulo the cycle space).  On the dual side only strictly positive
tree weights give term orders, so the walk is confined to that region.

A basis is stored as a sorted tuple of (index, orientation) pairs into
the universal set; orientation +1 means the positive part leads.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .algebra import GroebnerBasis, MarkedBinomial, TermOrder, binomial_from_vector, gb_from_universal
from .catalog import cost_type1, dual_cost_decreasing, validate_dual_cost
from .errors import InvalidFlipError, InvalidInputError
from .graph import build_tournament
from .ideals import check_side, cospace, universal


class _Context:
    def __init__(self, side, d):
        g = build_tournament(d)
        self.side, self.d, self.n = side, d, g.n
        self.dual = side == "dual"
        self.coords = g.tree_arcs() if self.dual else g.chord_arcs()
        self.vecs = universal(side, d)
        self.red = [[v[k] for k in self.coords] for v in self.vecs]
        self.plus = [sum(1 << k for k, x in enumerate(v) if x > 0) for v in self.vecs]
        self.minus = [sum(1 << k for k, x in enumerate(v) if x < 0) for v in self.vecs]
        self.lookup = {}
        for i, v in enumerate(self.vecs):
            self.lookup[v] = (i, 1)
            self.lookup[tuple(-x for x in v)] = (i, -1)

    def reduce_weights(self, w):
        """Reduced coordinates of a full weight vector, scaled to integers."""
        if self.dual:
            from .catalog import tree_part

            red = tree_part(self.d, w)
        else:
            g = build_tournament(self.d)
            red = []
            for k in self.coords:
                i, j = g.arcs[k]
                red.append(Fraction(w[k]) - sum(Fraction(w[g.index[(t, t + 1)]]) for t in range(i, j)))
        den = 1
        for x in red:
            den = den * x.denominator // _gcd(den, x.denominator)
        return [int(x * den) for x in red]

    def lift(self, a):
        w = [0] * self.n
        for k, x in zip(self.coords, a):
            w[k] = x
        return tuple(w)

    def extract(self, chain):
        picked = kernels.extract_sqfree(self.red, chain, self.plus, self.minus, False)
        return tuple(sorted(picked))

    def vector(self, elem):
        i, s = elem
        return [s * x for x in self.red[i]]

    def marked(self, elem):
        i, s = elem
        b = binomial_from_vector(self.vecs[i])
        return MarkedBinomial(b.plus, b.minus) if s > 0 else MarkedBinomial(b.minus, b.plus)

    def to_basis(self, basis, order=None):
        return GroebnerBasis(tuple(self.marked(e) for e in basis), order)

    def from_basis(self, G):
        return tuple(sorted(self.lookup[g.vector] for g in G.elements))

    def facet_point(self, basis, j):
        """Integer point strictly inside the cone except on element j's wall.

        Solves  v_h . a >= 1 (h != j),  v_j . a = 0  (and a >= 1 on the dual
        side) by the phase-one kernel; returns None if element j does not
        give a facet.
        """
        k = len(self.coords)
        others = [self.vector(e) for t, e in enumerate(basis) if t != j]
        vj = self.vector(basis[j])
        m = len(others)
        rows, rhs = [], []
        if self.dual:
            # a = 1 + a', a' >= 0
            for t, v in enumerate(others):
                row = list(v) + [0] * m
                row[k + t] = -1
                rows.append(row)
                rhs.append(1 - sum(v))
            rows.append(list(vj) + [0] * m)
            rhs.append(-sum(vj))
        else:
            for t, v in enumerate(others):
                row = list(v) + [-x for x in v] + [0] * m
                row[2 * k + t] = -1
                rows.append(row)
                rhs.append(1)
            rows.append(list(vj) + [-x for x in vj] + [0] * m)
            rhs.append(0)
        ok, cols, values, D, _ = kernels.phase_one(rows, rhs)
        if not ok:
            return None
        x = [0] * len(rows[0])
        for r, c in enumerate(cols):
            if c < len(x):
                x[c] = values[r]
        if self.dual:
            return [D + x[t] for t in range(k)]
        return [x[t] - x[k + t] for t in range(k)]

    def flip_at(self, basis, j, a):
        vj = self.vector(basis[j])
        return self.extract([a, [-x for x in vj]])

    def neighbors(self, basis, skip=None):
        out = []
        for j, elem in enumerate(basis):
            if elem == skip:
                continue
            a = self.facet_point(basis, j)
            if a is None:
                continue
            nb = self.flip_at(basis, j, a)
            out.append((nb, (elem[0], -elem[1])))
        return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _context(side, d):
    check_side(side)
    return _Context(side, d)


def _infer_side(G):
    for g in G.elements:
        v = g.vector
        n = len(v)
        d = int(round((1 + (1 + 8 * n) ** 0.5) / 2))
        # cutset binomials may have an empty side; circuits never do
        if not any(g.lead) or not any(g.trail):
            return "dual", d
    n = len(G.elements[0].lead)
    d = int(round((1 + (1 + 8 * n) ** 0.5) / 2))
    ctx = _context("primal", d)
    if all(g.vector in ctx.lookup for g in G.elements):
        return "primal", d
    return "dual", d


@dataclass(frozen=True)
class GroebnerCone:
    basis: GroebnerBasis
    inequalities: tuple  # u+ - u- of each element, in basis order
    facets: tuple  # positions (into basis.elements) of facet inequalities
    facet_points: tuple = field(repr=False, default=())


def groebner_cone(G, side=None):
    if side is None:
        side, d = _infer_side(G)
    else:
        check_side(side)
        n = len(G.elements[0].lead)
        d = int(round((1 + (1 + 8 * n) ** 0.5) / 2))
    ctx = _context(side, d)
    basis = ctx.from_basis(G)
    ordered = ctx.to_basis(basis, G.order)
    elems = [ctx.marked(e) for e in basis]
    facets, points = [], []
    for j in range(len(basis)):
        a = ctx.facet_point(basis, j)
        if a is not None:
            facets.append(ordered.elements.index(elems[j]))
            points.append(tuple(a))
    inequalities = tuple(g.vector for g in ordered.elements)
    return GroebnerCone(ordered, inequalities, tuple(facets), tuple(points))


def flip(G, facet, side=None):
    """Reduced Groebner basis across one facet of G's cone.

    ``facet`` is an element of G or its position in ``G.elements``.  The
    new order weighs by a point in the relative interior of the facet and
    breaks ties toward the far side of it.
    """
    if side is None:
        side, d = _infer_side(G)
    else:
        n = len(G.elements[0].lead)
        d = int(round((1 + (1 + 8 * n) ** 0.5) / 2))
    ctx = _context(side, d)
    if isinstance(facet, int):
        facet = G.elements[facet]
    basis = ctx.from_basis(G)
    target = ctx.lookup.get(facet.vector)
    if target not in basis:
        raise InvalidFlipError("the facet binomial is not an element of the basis")
    j = basis.index(target)
    a = ctx.facet_point(basis, j)
    if a is None:
        raise InvalidFlipError("that inequality is not a facet of the cone")
    vj = ctx.vector(basis[j])
    order = TermOrder(ctx.lift(a), refine=(ctx.lift([-x for x in vj]),))
    return ctx.to_basis(ctx.flip_at(basis, j, a), order)


@dataclass(frozen=True)
class FanSummary:
    side: str
    d: int
    count: int
    maxCard: int
    minCard: int
    partial: bool
    cones_without_valid_cost: int = 0


_worker_ctx = None


def _worker_init(side, d):
    global _worker_ctx
    _worker_ctx = _context(side, d)


def _worker_expand(item):
    basis, skip = item
    return _worker_ctx.neighbors(basis, skip)


def _seed(ctx):
    if ctx.dual:
        w = dual_cost_decreasing(ctx.d).values
    else:
        w = cost_type1(ctx.d).values
    return ctx.extract([ctx.reduce_weights(w)])


def enumerate_fan(side, d, budget=None, parallel=1, collect=True):
    """Breadth-first walk over the fan from a closed-form seed.

    Returns (summary, bases) where bases are GroebnerBasis objects (empty
    when ``collect`` is false).  Stops once ``budget`` bases are known and
    flags the result partial.
    """
    check_side(side)
    if d < 3:
        raise InvalidInputError("the fan walk needs d >= 3")
    ctx = _context(side, d)
    seed = _seed(ctx)
    seen = {seed: None}
    frontier = [(seed, None)]
    partial = False
    pool = ProcessPoolExecutor(parallel, initializer=_worker_init, initargs=(side, d)) if parallel > 1 else None
    try:
        while frontier and not partial:
            if pool is None:
                results = (ctx.neighbors(b, s) for b, s in frontier)
            else:
                results = pool.map(_worker_expand, frontier, chunksize=16)
            nxt = []
            for found in results:
                for nb, back in found:
                    if nb not in seen:
                        seen[nb] = None
                        nxt.append((nb, back))
                        if budget is not None and len(seen) >= budget:
                            partial = True
                            break
                if partial:
                    break
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    sizes = [len(b) for b in seen]
    summary = FanSummary(side, d, len(seen), max(sizes), min(sizes), partial)
    bases = [ctx.to_basis(b) for b in seen] if collect else []
    return summary, bases


def fan_keys(side, d, budget=None, parallel=1):
    """Summary plus the set of basis keys (compact form of the fan)."""
    ctx = _context(side, d)
    summary, bases = enumerate_fan(side, d, budget, parallel)
    return summary, {ctx.from_basis(G) for G in bases}


def random_cost(side, d, rng):
    """A random integer weight vector that defines a term order."""
    n = d * (d - 1) // 2
    if side == "primal":
        return tuple(rng.randint(-50, 100) for _ in range(n))
    g = build_tournament(d)
    while True:
        w = [rng.randint(-20, 100) if j == i + 1 else rng.randint(-5, 5) for (i, j) in g.arcs]
        ok, _ = validate_dual_cost(d, w)
        if ok and all(x > 0 for x in _context("dual", d).reduce_weights(w)):
            return tuple(w)


def fan_cross_check(side, d, trials, seed=0, keys=None, budget=None):
    """Engine bases for random costs, looked up in the enumerated fan."""
    ctx = _context(side, d)
    if keys is None:
        _, keys = fan_keys(side, d, budget)
    rng = random.Random(seed)
    missing = []
    for _ in range(trials):
        w = random_cost(side, d, rng)
        G = gb_from_universal(universal(side, d), TermOrder(w), cospace=cospace(side, d))
        if ctx.from_basis(G) not in keys:
            missing.append(w)
    return {"side": side, "d": d, "trials": trials, "fan_size": len(keys), "missing": len(missing),
            "examples": [list(w) for w in missing[:5]]}


def flip_closed(side, d, keys):
    """True when every facet flip of every basis stays inside ``keys``."""
    ctx = _context(side, d)
    return all(nb in keys for b in keys for nb, _ in ctx.neighbors(b))
