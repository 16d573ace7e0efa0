"""Monomials, binomials, term orders and Groebner bases of lattice ideals.

Everything works over n variables; a monomial x^a is the tuple a of
exponents.  The ideals met here are toric, so a binomial is determined
by its exponent difference u = u+ - u-, and "marking" picks which of
x^{u+}, x^{u-} leads.
"""

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import kernels
from .errors import DegenerateBinomialError, InvalidInputError, OrderError
from .linalg import inequality_feasible, nullspace


@dataclass(frozen=True)
class Binomial:
    """x^plus - x^minus with disjoint supports, orientation not chosen."""

    plus: tuple
    minus: tuple

    @property
    def vector(self):
        return tuple(p - q for p, q in zip(self.plus, self.minus))


def binomial_from_vector(v):
    if not any(v):
        raise InvalidInputError("zero vector has no binomial")
    return Binomial(tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v))


@dataclass(frozen=True, order=True)
class MarkedBinomial:
    lead: tuple
    trail: tuple

    @property
    def vector(self):
        return tuple(p - q for p, q in zip(self.lead, self.trail))

    def reversed(self):
        return MarkedBinomial(self.trail, self.lead)


@dataclass(frozen=True)
class TermOrder:
    """The refinement of a weight order by a tiebreak.

    Monomials are compared by ``weights``, then by each vector of
    ``refine`` in turn, then by the tiebreak: lexicographic (``mode="lex"``)
    or reverse lexicographic (``"revlex"``) over ``perm``, which lists the
    variables from largest to smallest (identity when omitted).
    """

    weights: tuple
    refine: tuple = ()
    perm: tuple = None
    mode: str = "lex"
    chain: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.mode not in ("lex", "revlex"):
            raise InvalidInputError(f"unknown tiebreak mode {self.mode!r}")
        w = tuple(Fraction(x) for x in self.weights)
        refine = tuple(tuple(Fraction(x) for x in r) for r in self.refine)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "refine", refine)
        perm = tuple(range(len(w))) if self.perm is None else tuple(self.perm)
        if sorted(perm) != list(range(len(w))):
            raise InvalidInputError("tiebreak permutation must cover every variable once")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "chain", (w,) + refine)

    @property
    def n(self):
        return len(self.weights)

    def to_json(self):
        return {
            "weights": list(self.weights),
            "refine": [list(r) for r in self.refine],
            "tiebreak": {"mode": self.mode, "perm": list(self.perm)},
        }


def lex_order(n, perm=None):
    return TermOrder((0,) * n, perm=perm)


def compare(u, v, order):
    """Return 1 if x^u > x^v, -1 if x^u < x^v, and 0 if u == v."""
    for w in order.chain:
        t = sum(wi * (a - b) for wi, a, b in zip(w, u, v) if a != b)
        if t:
            return 1 if t > 0 else -1
    if order.mode == "lex":
        for k in order.perm:
            if u[k] != v[k]:
                return 1 if u[k] > v[k] else -1
    else:
        for k in reversed(order.perm):
            if u[k] != v[k]:
                return 1 if u[k] < v[k] else -1
    return 0


def mark(b, order):
    if isinstance(b, MarkedBinomial):
        b = Binomial(b.lead, b.trail)
    s = compare(b.plus, b.minus, order)
    if s == 0:
        raise DegenerateBinomialError("both terms are the same monomial")
    return MarkedBinomial(b.plus, b.minus) if s > 0 else MarkedBinomial(b.minus, b.plus)


def divides(a, m):
    return all(x <= y for x, y in zip(a, m))


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple

    def __post_init__(self):
        gens = sorted(set(tuple(g) for g in self.generators), reverse=True)
        minimal = [g for g in gens if not any(h != g and divides(h, g) for h in gens)]
        object.__setattr__(self, "generators", tuple(minimal))

    def is_squarefree(self):
        return all(x <= 1 for g in self.generators for x in g)


def is_standard(m, ideal):
    return not any(divides(g, m) for g in ideal.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: TermOrder

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements), reverse=True)))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def key(self):
        return frozenset(self.elements)

    def same_basis(self, other):
        return self.key() == other.key()


def initial_ideal(G):
    return MonomialIdeal(tuple(g.lead for g in G.elements))


def is_homogeneous(gens, grading):
    for b in gens:
        plus, minus = (b.lead, b.trail) if isinstance(b, MarkedBinomial) else (b.plus, b.minus)
        if sum(w * x for w, x in zip(grading, plus)) != sum(w * x for w, x in zip(grading, minus)):
            return False
    return True


# -- reduction -----------------------------------------------------------

class _Reducer:
    """Division by a list of marked binomials, with an optional step guard."""

    def __init__(self, elements, guard=None):
        self.items = []
        self.guard = guard
        self.steps = 0
        for g in elements:
            self.add(g)

    def add(self, g):
        supp = tuple(k for k, x in enumerate(g.lead) if x)
        if not supp:
            raise OrderError("1 is a leading term; the order is not a well-order here")
        trail = tuple((k, x) for k, x in enumerate(g.trail) if x)
        self.items.append((g.lead, supp, trail))

    def reducers(self, m):
        for idx, (lead, supp, _) in enumerate(self.items):
            if all(m[i] >= lead[i] for i in supp):
                yield idx

    def step(self, m, idx):
        lead, supp, trail = self.items[idx]
        k = min(m[i] // lead[i] for i in supp)
        for i in supp:
            m[i] -= k * lead[i]
        for i, x in trail:
            m[i] += k * x
        self.steps += 1
        if self.guard is not None and self.steps > self.guard:
            raise OrderError("reduction exceeded the step guard; the order is not a well-order here")

    def normal_form(self, m, choose=None):
        m = list(m)
        while True:
            if choose is None:
                idx = next(self.reducers(m), None)
            else:
                options = list(self.reducers(m))
                idx = choose(options) if options else None
            if idx is None:
                return tuple(m)
            self.step(m, idx)


def normal_form(m, G, choose=None):
    """Remainder of x^m on division by G.

    Each step divides by one lead as many times as it goes in at once.
    ``choose`` (a callable picking from the list of usable reducer indices)
    replaces the default first-match rule, e.g. for confluence tests.
    """
    elements = G.elements if isinstance(G, GroebnerBasis) else tuple(G)
    return _Reducer(elements).normal_form(m, choose)


def _cancel(p, q):
    common = [min(a, b) for a, b in zip(p, q)]
    return tuple(a - c for a, c in zip(p, common)), tuple(b - c for b, c in zip(q, common))


# -- well-ordering certificate --------------------------------------------

def certify_order(order, vectors, cospace=None):
    """Name the reason ``order`` is a well-order on the fibers, or None.

    The lattice is spanned by ``vectors``; ``cospace`` (a basis of its
    orthogonal complement) is computed when not supplied.  Reasons:
    "nonneg" (all weights nonnegative, lex tiebreak), "graded" (the
    complement holds a strictly positive vector, so fibers are finite),
    "lattice" (each weight is equivalent on fibers to a nonnegative one).
    """
    n = order.n
    if order.mode == "lex" and all(x >= 0 for w in order.chain for x in w):
        return "nonneg"
    if cospace is None:
        cospace = nullspace([list(v) for v in vectors], n) if vectors else nullspace([], n)
    cospace = [list(r) for r in cospace]
    if cospace:
        cols = [[r[k] for r in cospace] for k in range(n)]
        if inequality_feasible(cols, [1] * n) is not None:
            return "graded"
    if order.mode != "lex":
        return None
    found = []
    for w in order.chain:
        cols = [[r[k] for r in cospace] + [a[k] for a in found] for k in range(n)]
        if cols and cols[0]:
            sol = inequality_feasible(cols, [-x for x in w])
        else:
            sol = () if all(x >= 0 for x in w) else None
        if sol is None:
            return None
        r = len(cospace)
        a = [w[k] + sum(sol[t] * cospace[t][k] for t in range(r))
             + sum(sol[r + t] * found[t][k] for t in range(len(found))) for k in range(n)]
        found.append(tuple(a))
    return "lattice"


def _vectors(gens):
    out = []
    for b in gens:
        if isinstance(b, (Binomial, MarkedBinomial)):
            out.append(b.vector)
        else:
            out.append(tuple(b))
    return out


# -- Buchberger -------------------------------------------------------------

DEFAULT_GUARD = 200000


def buchberger(gens, order, cospace=None, guard=DEFAULT_GUARD):
    """Reduced Groebner basis of the binomial ideal generated by ``gens``.

    ``gens`` may hold Binomials, MarkedBinomials or exponent-difference
    vectors.  Raises OrderError if the order is uncertified and a
    reduction chain exceeds ``guard`` steps.
    """
    vectors = [v for v in _vectors(gens) if any(v)]
    if certify_order(order, vectors, cospace) is not None:
        guard = None
    basis = _autoreduce([mark(binomial_from_vector(v), order) for v in vectors], order, guard)
    red = _Reducer(basis, guard)
    queue = []

    def push(i, j):
        a, b = basis[i].lead, basis[j].lead
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            return  # coprime leads
        L = tuple(max(x, y) for x, y in zip(a, b))
        heapq.heappush(queue, (sum(L), tuple(-x for x in L), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    while queue:
        _, negL, i, j = heapq.heappop(queue)
        L = tuple(-x for x in negL)
        gi, gj = basis[i], basis[j]
        s1 = tuple(l - a + b for l, a, b in zip(L, gi.lead, gi.trail))
        s2 = tuple(l - a + b for l, a, b in zip(L, gj.lead, gj.trail))
        r1, r2 = red.normal_form(s1), red.normal_form(s2)
        if r1 == r2:
            continue
        p, q = _cancel(r1, r2)
        g = mark(Binomial(p, q), order)
        basis.append(g)
        red.add(g)
        t = len(basis) - 1
        for i2 in range(t):
            push(i2, t)
    return GroebnerBasis(tuple(_reduce_basis(basis, guard)), order)


def _autoreduce(elements, order, guard):
    current = list(dict.fromkeys(elements))
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(current):
            others = current[:idx] + current[idx + 1:]
            red = _Reducer(others, guard)
            a, b = red.normal_form(g.lead), red.normal_form(g.trail)
            if a == g.lead and b == g.trail:
                continue
            changed = True
            if a == b:
                current = others
            else:
                p, q = _cancel(a, b)
                h = mark(Binomial(p, q), order)
                current = list(dict.fromkeys(others + [h]))
            break
    return current


def _reduce_basis(elements, guard=None):
    """Keep one element per minimal lead and reduce its trail."""
    leads = sorted(set(g.lead for g in elements))
    minimal = [m for m in leads if not any(o != m and divides(o, m) for o in leads)]
    chosen = {}
    for g in elements:
        if g.lead in minimal and g.lead not in chosen:
            chosen[g.lead] = g
    red = _Reducer(chosen.values(), guard)
    out = []
    for lead, g in chosen.items():
        out.append(MarkedBinomial(lead, red.normal_form(g.trail)))
    return out


# -- extraction from a universal Groebner basis ---------------------------

def _integer_chain(order):
    chain = []
    for w in order.chain:
        den = 1
        for x in w:
            den = lcm(den, x.denominator)
        chain.append([int(x * den) for x in w])
    return chain


def gb_from_universal(universal, order, cospace=None, check=True):
    """Reduced Groebner basis picked out of a universal Groebner basis.

    Every element is marked by ``order``; the minimal leads are kept and
    their trails reduced.  For square-free universal sets the work is
    done by the compiled kernel.
    """
    vectors = [v for v in _vectors(universal) if any(v)]
    if check and certify_order(order, vectors, cospace) is None:
        raise OrderError("term order is not certified as a well-order on this ideal")
    if vectors and all(abs(x) <= 1 for v in vectors for x in v):
        rank = {var: pos for pos, var in enumerate(order.perm)}
        plus = [sum(1 << rank[k] for k, x in enumerate(v) if x > 0) for v in vectors]
        minus = [sum(1 << rank[k] for k, x in enumerate(v) if x < 0) for v in vectors]
        picked = kernels.extract_sqfree(
            [list(v) for v in vectors], _integer_chain(order), plus, minus, order.mode == "revlex"
        )
        out = []
        for idx, s in picked:
            b = binomial_from_vector(vectors[idx])
            out.append(MarkedBinomial(b.plus, b.minus) if s > 0 else MarkedBinomial(b.minus, b.plus))
        return GroebnerBasis(tuple(out), order)
    marked = [mark(binomial_from_vector(v), order) for v in vectors]
    return GroebnerBasis(tuple(_reduce_basis(marked)), order)


def gb_from_universal_reference(universal, order):
    """Plain-Python extraction (no kernel), kept for cross-checks."""
    marked = [mark(binomial_from_vector(v), order) for v in _vectors(universal) if any(v)]
    return GroebnerBasis(tuple(_reduce_basis(marked)), order)


def is_reduced(G):
    leads = [g.lead for g in G.elements]
    for g in G.elements:
        for h in leads:
            if h != g.lead and (divides(h, g.lead) or divides(h, g.trail)):
                return False
        if divides(g.lead, g.trail):
            return False
    return True


def s_pairs_reduce(G):
    """True when every S-binomial of G reduces to zero."""
    red = _Reducer(G.elements)
    els = G.elements
    for i in range(len(els)):
        for j in range(i):
            a, b = els[i], els[j]
            L = tuple(max(x, y) for x, y in zip(a.lead, b.lead))
            s1 = tuple(l - p + q for l, p, q in zip(L, a.lead, a.trail))
            s2 = tuple(l - p + q for l, p, q in zip(L, b.lead, b.trail))
            if red.normal_form(s1) != red.normal_form(s2):
                return False
    return True


# -- JSON -----------------------------------------------------------------

def monomial_to_json(m, labels):
    return {labels[k]: x for k, x in enumerate(m) if x}


def binomial_to_json(g, labels):
    if isinstance(g, MarkedBinomial):
        return {"plus": monomial_to_json(g.lead, labels), "minus": monomial_to_json(g.trail, labels)}
    return {"plus": monomial_to_json(g.plus, labels), "minus": monomial_to_json(g.minus, labels)}


def basis_to_json(G, labels):
    return {
        "order": G.order.to_json(),
        "elements": [binomial_to_json(g, labels) for g in G.elements],
    }


def monomial_to_str(m, labels):
    parts = []
    for k, x in enumerate(m):
        if x:
            parts.append(f"x{labels[k]}" + (f"^{x}" if x > 1 else ""))
    return "*".join(parts) if parts else "1"


def binomial_to_str(g, labels):
    return f"{monomial_to_str(g.lead, labels)} - {monomial_to_str(g.trail, labels)}"
