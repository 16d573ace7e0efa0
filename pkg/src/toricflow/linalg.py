"""Exact rational linear algebra and LP feasibility.

Matrices are lists of rows.  Entries may be ints or Fractions; results
are Fractions (or ints where noted).  Nothing here touches floating
point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import kernels
from .errors import DimensionMismatchError


def as_fractions(A):
    return [[Fraction(x) for x in row] for row in A]


def _shape(A):
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise DimensionMismatchError("ragged matrix")
    return m, n


def matmul(A, B):
    m, k = _shape(A)
    k2, n = _shape(B)
    if m and k != k2:
        raise DimensionMismatchError(f"cannot multiply {m}x{k} by {k2}x{n}")
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(n)] for i in range(m)]


def matvec(A, x):
    m, n = _shape(A)
    if m and n != len(x):
        raise DimensionMismatchError(f"matrix has {n} columns, vector {len(x)} entries")
    return [sum(a * v for a, v in zip(row, x)) for row in A]


def transpose(A):
    m, n = _shape(A)
    return [[A[i][j] for i in range(m)] for j in range(n)]


def _eliminate(A, b=None):
    """Full-pivot Gaussian elimination to reduced row echelon form.

    Returns (R, rhs, pivots) where pivots lists (row, column) pairs.
    """
    R = as_fractions(A)
    m, n = _shape(R)
    rhs = [Fraction(x) for x in b] if b is not None else [Fraction(0)] * m
    pivots = []
    free_rows = list(range(m))
    free_cols = set(range(n))
    while free_rows and free_cols:
        best = None
        for i in free_rows:
            for j in free_cols:
                v = R[i][j]
                if v and (best is None or abs(v) > abs(R[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        r, c = best
        p = R[r][c]
        R[r] = [x / p for x in R[r]]
        rhs[r] /= p
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
                rhs[i] -= f * rhs[r]
        pivots.append((r, c))
        free_rows.remove(r)
        free_cols.discard(c)
    return R, rhs, pivots


def rank(A):
    return len(_eliminate(A)[2])


@dataclass(frozen=True)
class Solution:
    """Outcome of :func:`solve`.

    status is "unique", "none" or "underdetermined".  For an
    underdetermined system x is one particular solution (free variables
    set to zero).
    """

    status: str
    x: tuple = None


def solve(A, b):
    m, n = _shape(A)
    if len(b) != m:
        raise DimensionMismatchError(f"{m} equations but {len(b)} right-hand sides")
    R, rhs, pivots = _eliminate(A, b)
    pivot_rows = {r for r, _ in pivots}
    for i in range(m):
        if i not in pivot_rows and rhs[i] != 0:
            return Solution("none")
    x = [Fraction(0)] * n
    for r, c in pivots:
        x[c] = rhs[r]
    status = "unique" if len(pivots) == n else "underdetermined"
    return Solution(status, tuple(x))


def nullspace(A, n=None):
    """Basis of {x : Ax = 0} as primitive integer vectors."""
    if not A:
        n = n or 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    R, _, pivots = _eliminate(A)
    n = len(R[0])
    pivot_cols = {c: r for r, c in pivots}
    basis = []
    for f in range(n):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for c, r in pivot_cols.items():
            v[c] = -R[r][f]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Scale a rational vector to coprime integers (sign kept)."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


@dataclass(frozen=True)
class LPResult:
    """Feasibility of {x : Ax = b, x >= 0}.

    When feasible, ``x`` is a vertex witness.  Otherwise ``y`` is a
    Farkas certificate: yA <= 0 componentwise and yb > 0.
    """

    feasible: bool
    x: tuple = None
    y: tuple = None

    def __bool__(self):
        return self.feasible


def _integer_rows(A, b):
    rows, rhs, scales = [], [], []
    for row, bi in zip(A, b):
        den = Fraction(bi).denominator
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        rows.append([int(Fraction(x) * den) for x in row])
        rhs.append(int(Fraction(bi) * den))
        scales.append(den)
    return rows, rhs, scales


def lp_feasible(A, b, backend=None):
    m, n = _shape(A)
    if len(b) != m:
        raise DimensionMismatchError(f"{m} equations but {len(b)} right-hand sides")
    if m == 0:
        return LPResult(True, x=tuple(Fraction(0) for _ in range(n)))
    rows, rhs, scales = _integer_rows(A, b)
    feasible, basis, values, D, art = kernels.phase_one(rows, rhs, backend=backend)
    if feasible:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = Fraction(values[i], D)
        return LPResult(True, x=tuple(x))
    # y_i = 1 - reduced cost of artificial i, for the sign-normalized rows;
    # rows scaled to integers keep the same certificate up to that scale
    y = []
    for i in range(m):
        yi = 1 - Fraction(art[i], D)
        if rhs[i] < 0:
            yi = -yi
        y.append(yi * scales[i])
    return LPResult(False, y=tuple(y))


def check_feasible_witness(A, b, x):
    return all(v >= 0 for v in x) and matvec(A, x) == [Fraction(v) for v in b]


def check_farkas(A, b, y):
    yA = [sum(y[i] * A[i][j] for i in range(len(A))) for j in range(len(A[0]))]
    return all(v <= 0 for v in yA) and sum(yi * bi for yi, bi in zip(y, b)) > 0


def inequality_feasible(G, h, equalities=(), eq_rhs=(), nonneg=False):
    """A point a with G a >= h (and E a = f), or None.

    Variables are free unless ``nonneg`` is set.  Solved as a phase-one
    problem on a = a+ - a-, with one surplus column per inequality.
    """
    k = len(G[0]) if G else (len(equalities[0]) if equalities else 0)
    mg = len(G)
    A, b = [], []
    for row, hi in zip(G, h):
        line = list(row) if nonneg else list(row) + [-x for x in row]
        surplus = [0] * mg
        A.append(line + surplus)
        b.append(hi)
    for i in range(mg):
        A[i][(k if nonneg else 2 * k) + i] = -1
    for row, fi in zip(equalities, eq_rhs):
        line = list(row) if nonneg else list(row) + [-x for x in row]
        A.append(line + [0] * mg)
        b.append(fi)
    if not A:
        return tuple(Fraction(0) for _ in range(k))
    res = lp_feasible(A, b)
    if not res.feasible:
        return None
    x = res.x
    if nonneg:
        return tuple(x[:k])
    return tuple(x[j] - x[k + j] for j in range(k))
