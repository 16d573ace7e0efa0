"""Integer min-cost flow on G_d: Conti-Traverso, standard pairs, oracle."""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import TermOrder, compare, normal_form
from .catalog import tree_part
from .errors import InfeasibleError, InvalidBasisError, InvalidInputError
from .graph import (
    build_tournament,
    fundamental_matrices,
    incidence_matrix,
    reduce_rows,
    spanning_tree_masks,
)
from .ideals import engine_gb
from .linalg import matvec, solve
from .pairs import standard_pairs_primal, tree_potentials


@dataclass(frozen=True)
class FlowInstance:
    d: int
    b: tuple
    c: tuple

    def __post_init__(self):
        g = build_tournament(self.d)
        if len(self.b) != self.d:
            raise InvalidInputError(f"b needs {self.d} entries, got {len(self.b)}")
        if len(self.c) != g.n:
            raise InvalidInputError(f"c needs {g.n} entries, got {len(self.c)}")
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))

    def order(self):
        return TermOrder(self.c)

    def cost(self, x):
        return sum(ci * xi for ci, xi in zip(self.c, x))


@dataclass(frozen=True)
class SolveResult:
    x: tuple
    objective: Fraction
    method: str
    pairs_examined: int = 0


def _check_supplies(b):
    if sum(b) != 0:
        raise InfeasibleError("supplies do not sum to zero")
    running = 0
    for k, v in enumerate(b, start=1):
        running += v
        if running < 0:
            raise InfeasibleError(f"prefix sum through vertex {k} is {running}", prefix=k)


def feasible_flow(inst):
    """Some nonnegative integral x with Ax = b.

    Arcs only run forward, so vertex k's deficit is served from the
    earliest vertices still holding surplus.
    """
    _check_supplies(inst.b)
    g = build_tournament(inst.d)
    x = [0] * g.n
    pending = []  # [vertex, remaining surplus]
    for v, s in enumerate(inst.b, start=1):
        if s > 0:
            pending.append([v, s])
        need = -s
        while need > 0:
            src = pending[0]
            take = min(src[1], need)
            x[g.index[(src[0], v)]] += take
            src[1] -= take
            need -= take
            if src[1] == 0:
                pending.pop(0)
    return tuple(x)


def conti_traverso(inst, order=None):
    order = order or inst.order()
    G = engine_gb("primal", inst.d, order)
    x = normal_form(feasible_flow(inst), G)
    return SolveResult(x, inst.cost(x), "ct")


def _tree_arcs(g, mask):
    return [g.arcs[k] for k in range(g.n) if mask >> k & 1]


def solve_by_standard_pairs(inst, order=None):
    """Try the tree systems of the standard pairs until one is feasible.

    A nonnegative integral solution supported on a standard pair is a
    standard monomial of the fiber, hence the optimum.  Pairs are tried
    in decreasing order of the dual objective y.b of their potentials,
    which puts the optimal basis first when the cost is generic.
    """
    _check_supplies(inst.b)
    order = order or inst.order()
    g = build_tournament(inst.d)
    pairs = standard_pairs_primal(inst.d, order)
    ranked = []
    for p in pairs:
        tree = [g.arcs[k] for k in p.sigma]
        y = tree_potentials(inst.d, tree, inst.c, g.index)
        ranked.append((-sum(yi * bi for yi, bi in zip(y, inst.b)), p.sigma))
    ranked.sort()
    Abar = reduce_rows(incidence_matrix(g))
    rhs = list(inst.b[:-1])
    for examined, (_, sigma) in enumerate(ranked, start=1):
        sol = solve([[row[k] for k in sigma] for row in Abar], rhs)
        if sol.status != "unique":
            continue
        if all(v >= 0 and v.denominator == 1 for v in sol.x):
            x = [0] * g.n
            for k, v in zip(sigma, sol.x):
                x[k] = int(v)
            return SolveResult(tuple(x), inst.cost(x), "pairs", examined)
    raise InfeasibleError("no standard pair admits a nonnegative integral solution")


def tree_flow(d, arcs, b):
    """Flow on a spanning tree meeting supplies b, by peeling leaves."""
    supply = {v: b[v - 1] for v in range(1, d + 1)}
    nbrs = {v: set() for v in range(1, d + 1)}
    for i, j in arcs:
        nbrs[i].add(j)
        nbrs[j].add(i)
    flow = {}
    leaves = [v for v in nbrs if len(nbrs[v]) == 1]
    while leaves:
        v = leaves.pop()
        if not nbrs[v]:
            continue
        (u,) = nbrs[v]
        s = supply[v]
        if v < u:
            flow[(v, u)] = s
        else:
            flow[(u, v)] = -s
        supply[u] += s
        nbrs[u].discard(v)
        nbrs[v].clear()
        if len(nbrs[u]) == 1:
            leaves.append(u)
    return flow


def oracle_optimum(inst, order=None):
    """Best basic solution over every spanning tree (brute force)."""
    if inst.d > 7:
        raise InvalidInputError("the oracle enumerates all trees; keep d <= 7")
    _check_supplies(inst.b)
    order = order or inst.order()
    g = build_tournament(inst.d)
    best = None
    for mask in spanning_tree_masks(inst.d):
        flow = tree_flow(inst.d, _tree_arcs(g, mask), inst.b)
        if any(v < 0 for v in flow.values()):
            continue
        x = [0] * g.n
        for arc, v in flow.items():
            x[g.index[arc]] = v
        x = tuple(x)
        if best is None or compare(x, best, order) < 0:
            best = x
    if best is None:
        raise InfeasibleError("no spanning tree carries a nonnegative flow")
    return SolveResult(best, inst.cost(best), "oracle")


METHODS = {"ct": conti_traverso, "pairs": solve_by_standard_pairs, "oracle": oracle_optimum}


def solve_instance(inst, method="ct", order=None):
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}")
    return METHODS[method](inst, order)


@dataclass(frozen=True)
class ReducedCostResult:
    sigma: tuple
    values: tuple
    identity_holds: bool


def reduced_cost(sigma, btilde, d):
    """b~'_sigma = b~_sigma - N1^T (B1^{-1})^T b~_cobar for the tree sigma.

    B1 and N1 are the columns of the fundamental circuit matrix on the
    co-tree and on sigma.  Also checks that the cutset-matrix columns of
    sigma map the result back to the tree part of b~.
    """
    g = build_tournament(d)
    sigma = tuple(sorted(sigma))
    if len(sigma) != d - 1:
        raise InvalidBasisError("sigma must have d - 1 arcs")
    bt = [Fraction(x) for x in btilde]
    fm = fundamental_matrices(g)
    C = fm.in_arc_order(g, fm.circuitMatrix)
    K = fm.in_arc_order(g, fm.cutsetMatrix)
    cobar = [k for k in range(g.n) if k not in sigma]
    B1t = [[C[r][k] for r in range(len(C))] for k in cobar]  # B1 transposed
    z = solve(B1t, [bt[k] for k in cobar]) if cobar else None
    if cobar and z.status != "unique":
        raise InvalidBasisError("co-tree block of the circuit matrix is singular")
    zx = z.x if cobar else ()
    values = tuple(
        bt[k] - sum(C[r][k] * zx[r] for r in range(len(C))) for k in sigma
    )
    lhs = matvec([[row[k] for k in sigma] for row in K], values)
    return ReducedCostResult(sigma, values, lhs == tree_part(d, bt))
