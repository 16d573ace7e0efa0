"""The two toric ideals attached to G_d and their default term orders.

The primal ideal I_A has the circuits of G_d as universal Groebner
basis; the dual ideal (of the fundamental circuit matrix) has the
cutsets.  Both are cached per d.
"""

from functools import lru_cache

from .algebra import TermOrder, buchberger, gb_from_universal
from .errors import InvalidInputError
from .graph import (
    build_tournament,
    enumerate_circuits,
    enumerate_cutsets,
    fundamental_matrices,
    incidence_matrix,
    reduce_rows,
)


@lru_cache(maxsize=None)
def primal_universal(d):
    g = build_tournament(d)
    return tuple(c.coefficients for c in enumerate_circuits(g, cap=max(d, 9)))


@lru_cache(maxsize=None)
def dual_universal(d):
    g = build_tournament(d)
    return tuple(c.coefficients for c in enumerate_cutsets(g, cap=max(d, 9)))


@lru_cache(maxsize=None)
def primal_cospace(d):
    """Rows spanning the orthogonal complement of ker A (the row space)."""
    return tuple(tuple(r) for r in reduce_rows(incidence_matrix(build_tournament(d))))


@lru_cache(maxsize=None)
def dual_cospace(d):
    g = build_tournament(d)
    fm = fundamental_matrices(g)
    return fm.in_arc_order(g, fm.circuitMatrix)


def universal(side, d):
    return primal_universal(d) if side == "primal" else dual_universal(d)


def cospace(side, d):
    return primal_cospace(d) if side == "primal" else dual_cospace(d)


def check_side(side):
    if side not in ("primal", "dual"):
        raise InvalidInputError(f"side must be 'primal' or 'dual', got {side!r}")


def default_order(weights, perm=None, mode="lex"):
    return TermOrder(tuple(weights), perm=perm, mode=mode)


def engine_gb(side, d, order, method="universal"):
    """Reduced Groebner basis of the primal or dual ideal under ``order``."""
    check_side(side)
    n = d * (d - 1) // 2
    if order.n != n:
        raise InvalidInputError(f"order has {order.n} weights, G_{d} has {n} arcs")
    if method == "universal":
        return gb_from_universal(universal(side, d), order, cospace=cospace(side, d))
    if method == "buchberger":
        return buchberger(universal(side, d), order, cospace=cospace(side, d))
    raise InvalidInputError(f"unknown engine method {method!r}")
