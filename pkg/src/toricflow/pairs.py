"""Standard pairs, regular triangulations, homogenization and volumes."""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import (
    MarkedBinomial,
    MonomialIdeal,
    TermOrder,
    buchberger,
    divides,
    initial_ideal,
    is_standard,
)
from .catalog import cost_type1, validate_dual_cost
from .errors import OrderError
from .graph import (
    build_tournament,
    incidence_matrix,
    reduce_rows,
    spanning_tree_masks,
)
from .ideals import engine_gb
from .linalg import solve


@dataclass(frozen=True, order=True)
class StandardPair:
    """The cell x^root * k[x_j : j in sigma]; sigma holds variable indices."""

    root: tuple
    sigma: tuple

    def contains(self, m):
        return all(x >= r if k in self.sigma else x == r for k, (x, r) in enumerate(zip(m, self.root)))


def _as_order(order_or_cost):
    if isinstance(order_or_cost, TermOrder):
        return order_or_cost
    return TermOrder(tuple(order_or_cost))


def _lead_masks(G):
    return [sum(1 << k for k, x in enumerate(g.lead) if x) for g in G.elements]


def _mask_to_tuple(mask, n):
    return tuple(k for k in range(n) if mask >> k & 1)


def standard_pairs_primal(d, order):
    """Pairs (1, T) over spanning trees T whose monomial x^T is standard."""
    G = engine_gb("primal", d, _as_order(order))
    return _tree_pairs(d, _lead_masks(G), complement=False)


def standard_pairs_dual(d, order):
    """Pairs (1, S) over co-trees S whose monomial is standard.

    ``order`` is a TermOrder or a dual cost b~; a cost must pass
    validate_dual_cost.
    """
    if not isinstance(order, TermOrder):
        ok, _ = validate_dual_cost(d, order)
        if not ok:
            raise OrderError("b~ has no nonnegative equivalent; it defines no term order")
    G = engine_gb("dual", d, _as_order(order))
    return _tree_pairs(d, _lead_masks(G), complement=True)


def _tree_pairs(d, leads, complement):
    n = d * (d - 1) // 2
    full = (1 << n) - 1
    out = []
    for tree in spanning_tree_masks(d):
        sigma = full ^ tree if complement else tree
        if not any(L & sigma == L for L in leads):
            out.append(StandardPair((0,) * n, _mask_to_tuple(sigma, n)))
    return sorted(out)


def arithmetic_degree(pairs):
    return len(pairs)


# -- regular triangulation --------------------------------------------------

@dataclass(frozen=True)
class TriangulationFace:
    sigma: tuple
    certificate: tuple  # vertex potentials y_1..y_d with y_d = 0
    strict: bool


def tree_potentials(d, tree_arcs, c, arc_index):
    """y with y_i - y_j = c_ij on the tree arcs and y_d = 0."""
    adj = {v: [] for v in range(1, d + 1)}
    for i, j in tree_arcs:
        w = Fraction(c[arc_index[(i, j)]])
        adj[i].append((j, -w))  # y_j = y_i - c_ij
        adj[j].append((i, w))
    y = {d: Fraction(0)}
    stack = [d]
    while stack:
        v = stack.pop()
        for u, delta in adj[v]:
            if u not in y:
                y[u] = y[v] + delta
                stack.append(u)
    return tuple(y[v] for v in range(1, d + 1))


def triangulation_faces(d, c):
    """Maximal faces of the regular triangulation for cost c.

    Returns (faces, generic).  When some tree's potentials are tight on an
    arc outside the tree the cost is not generic; the faces are then
    taken from the standard pairs of the refined order and marked
    non-strict.
    """
    g = build_tournament(d)
    faces = []
    generic = True
    for mask in spanning_tree_masks(d):
        tree = [g.arcs[k] for k in range(g.n) if mask >> k & 1]
        y = tree_potentials(d, tree, c, g.index)
        slack = [Fraction(c[k]) - (y[i - 1] - y[j - 1]) for k, (i, j) in enumerate(g.arcs)]
        off = [slack[k] for k in range(g.n) if not mask >> k & 1]
        if all(s > 0 for s in off):
            faces.append(TriangulationFace(_mask_to_tuple(mask, g.n), y, True))
        elif all(s >= 0 for s in off):
            generic = False
    if generic:
        return sorted(faces, key=lambda f: f.sigma), True
    faces = []
    for p in standard_pairs_primal(d, c):
        tree = [g.arcs[k] for k in p.sigma]
        faces.append(TriangulationFace(p.sigma, tree_potentials(d, tree, c, g.index), False))
    return faces, False


# -- homogenization -------------------------------------------------------

def homogenize(A):
    """A' = [1 ... 1 1; A 0]."""
    n = len(A[0])
    return [[1] * (n + 1)] + [list(row) + [0] for row in A]


def _homogenize_binomial(g):
    da, db = sum(g.lead), sum(g.trail)
    top = max(da, db)
    lead = g.lead + (top - da,)
    trail = g.trail + (top - db,)
    return MarkedBinomial(lead, trail)


def homogenized_basis(d, c):
    """Reduced Groebner basis of I_{A'} under the weight (c, 0).

    Generators come from homogenizing a degree-compatible basis of I_A;
    Buchberger then runs in the n + 1 variables.
    """
    n = d * (d - 1) // 2
    deg_basis = engine_gb("primal", d, TermOrder((1,) * n))
    gens = [_homogenize_binomial(g) for g in deg_basis.elements]
    order = TermOrder(tuple(c) + (0,))
    Ap = homogenize(reduce_rows(incidence_matrix(build_tournament(d))))
    return buchberger(gens, order, cospace=Ap)


def standard_pairs_monomial(ideal, nvars):
    """All standard pairs of a monomial ideal, by exhaustive search.

    Roots are bounded by the largest generator exponent in each variable,
    which suffices: a larger exponent can always be absorbed into sigma.
    """
    gens = ideal.generators
    bound = [max((m[k] for m in gens), default=0) for k in range(nvars)]
    cells = []
    for r in range(nvars + 1):
        for sigma in itertools.combinations(range(nvars), r):
            sig = set(sigma)
            ranges = [range(1) if k in sig else range(max(bound[k], 1)) for k in range(nvars)]
            for root in itertools.product(*ranges):
                # every monomial of the cell avoids every generator
                if all(any(m[k] > root[k] for k in range(nvars) if k not in sig) for m in gens):
                    cells.append((root, frozenset(sigma)))

    def inside(a, b):
        (ra, sa), (rb, sb) = a, b
        if not sa <= sb or not divides(rb, ra):
            return False
        return all(k in sb for k in range(nvars) if ra[k] != rb[k])

    maximal = [a for a in cells if not any(b != a and inside(a, b) for b in cells)]
    return sorted(StandardPair(r, tuple(sorted(s))) for r, s in maximal)


def verify_homog_correspondence(d, c):
    n = d * (d - 1) // 2
    pairs = standard_pairs_primal(d, c)
    Gp = homogenized_basis(d, c)
    hpairs = standard_pairs_monomial(initial_ideal(Gp), n + 1)
    lifted = {(p.root + (0,), p.sigma + (n,)) for p in pairs}
    with_extra = {(p.root, p.sigma) for p in hpairs if n in p.sigma}
    without = [p for p in hpairs if n not in p.sigma]
    return {
        "d": d,
        "cost": [str(x) for x in c],
        "pairs": len(pairs),
        "homogenized_pairs": len(hpairs),
        "bijection": lifted == with_extra,
        "unmatched_homogenized": len(without),
    }


# -- Catalan checks --------------------------------------------------------

def catalan(m):
    return comb(2 * m, m) // (m + 1)


def count_pattern_trees(d):
    g = build_tournament(d)
    count = 0
    for mask in spanning_tree_masks(d):
        arcs = {g.arcs[k] for k in range(g.n) if mask >> k & 1}
        chain = any((i, j) in arcs and (j, k) in arcs for i, j, k in itertools.combinations(range(1, d + 1), 3))
        cross = any(
            (i, k) in arcs and (j, l) in arcs for i, j, k, l in itertools.combinations(range(1, d + 1), 4)
        )
        if not chain and not cross:
            count += 1
    return count


def _det(M):
    A = [list(map(Fraction, row)) for row in M]
    n = len(A)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        for r in range(col + 1, n):
            f = A[r][col] / A[col][col]
            A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return det


def normalized_volume(d, seed=0, attempts=20):
    """Normalized volume of conv(A') from a random regular triangulation.

    Every d-subset of columns is tested as a lower face for random integer
    heights; the |det| of the faces add up to the volume.  Heights that
    produce a tie off a face are resampled.
    """
    A = homogenize(reduce_rows(incidence_matrix(build_tournament(d))))
    cols = [tuple(row[j] for row in A) for j in range(len(A[0]))]
    rng = random.Random(seed)
    for _ in range(attempts):
        h = [rng.randint(1, 10**6) for _ in cols]
        total, tie = 0, False
        for sigma in itertools.combinations(range(len(cols)), d):
            M = [list(cols[j]) for j in sigma]
            sol = solve(M, [h[j] for j in sigma])
            if sol.status != "unique":
                continue
            y = sol.x
            vals = [h[j] - sum(a * b for a, b in zip(y, cols[j])) for j in range(len(cols)) if j not in sigma]
            if all(v > 0 for v in vals):
                total += abs(_det(M))
            elif all(v >= 0 for v in vals):
                tie = True
                break
        if not tie:
            return int(total)
    raise RuntimeError("no generic heights found")


def max_arith_degree_check(d, samples=50, seed=0, volume=True):
    expected = catalan(d - 1)
    deg1 = arithmetic_degree(standard_pairs_primal(d, cost_type1(d).values))
    rng = random.Random(seed)
    n = d * (d - 1) // 2
    worst = 0
    for _ in range(samples):
        c = tuple(rng.randint(1, 50) for _ in range(n))
        worst = max(worst, arithmetic_degree(standard_pairs_primal(d, c)))
    report = {
        "d": d,
        "catalan": expected,
        "type1_degree": deg1,
        "max_sampled_degree": worst,
        "pattern_trees": count_pattern_trees(d),
        "ok": deg1 == expected and worst <= expected,
    }
    if volume:
        vol = normalized_volume(d, seed=seed)
        report["normalized_volume"] = vol
        report["ok"] = report["ok"] and vol == expected
    return report


def covering_check(d, order, max_degree=6):
    """Standard monomials up to ``max_degree`` versus the union of the pairs.

    Returns the number of monomials examined; raises AssertionError on
    the first monomial where the two notions disagree.
    """
    n = d * (d - 1) // 2
    G = engine_gb("primal", d, _as_order(order))
    ideal = MonomialIdeal(tuple(g.lead for g in G.elements))
    pairs = standard_pairs_primal(d, order)
    seen = 0
    for total in range(max_degree + 1):
        for m in _compositions(total, n):
            seen += 1
            std = is_standard(m, ideal)
            covered = any(p.contains(m) for p in pairs)
            if std != covered:
                raise AssertionError(f"monomial {m}: standard={std}, covered={covered}")
    return seen


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
