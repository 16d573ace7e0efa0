"""Pure-Python versions of the hot kernels.

These mirror ``_kernels.pyx`` line for line and are used whenever the
compiled module is unavailable (or when ``TORICFLOW_PURE_PYTHON`` is set).
Both take and return plain Python ints so the two paths are
interchangeable.
"""


def phase_one(A, b):
    """Phase-one simplex on {x : Ax = b, x >= 0} with Bland's rule.

    A is a list of m integer rows of length N, b a list of m integers.
    The tableau is kept fraction-free: every entry is an integer numerator
    over the common denominator D (the previous pivot), and each pivot
    divides exactly.

    Returns (feasible, basis, rhs, D, art) where basis[i] is the column
    basic in row i, rhs[i]/D its value, and art[i]/D the reduced cost of
    the i-th artificial column (used for the Farkas certificate).  Rows
    with b_i < 0 are negated internally; ``art`` refers to those
    negated rows.
    """
    m = len(A)
    N = len(A[0]) if m else 0
    width = N + m + 1
    T = []
    for i in range(m):
        row = [0] * width
        s = -1 if b[i] < 0 else 1
        for j in range(N):
            row[j] = s * A[i][j]
        row[N + i] = 1
        row[-1] = s * b[i]
        T.append(row)
    z = [0] * width
    for i in range(m):
        for j in range(N):
            z[j] -= T[i][j]
        z[-1] -= T[i][-1]
    basis = [N + i for i in range(m)]
    D = 1
    while True:
        col = -1
        for j in range(N):
            if z[j] < 0:
                col = j
                break
        if col < 0:
            break
        row = -1
        for i in range(m):
            a = T[i][col]
            if a <= 0:
                continue
            if row < 0:
                row = i
                continue
            lhs = T[i][-1] * T[row][col]
            rhs = T[row][-1] * a
            if lhs < rhs or (lhs == rhs and basis[i] < basis[row]):
                row = i
        if row < 0:
            # unbounded direction cannot occur in phase one
            break
        p = T[row][col]
        prow = T[row]
        for i in range(m):
            if i == row:
                continue
            r = T[i]
            f = r[col]
            if f == 0:
                for j in range(width):
                    r[j] = r[j] * p // D
            else:
                for j in range(width):
                    r[j] = (r[j] * p - f * prow[j]) // D
        f = z[col]
        for j in range(width):
            z[j] = (z[j] * p - f * prow[j]) // D
        basis[row] = col
        D = p
    feasible = z[-1] == 0
    rhs = [T[i][-1] for i in range(m)]
    art = [z[N + i] for i in range(m)]
    return feasible, basis, rhs, D, art


def extract_sqfree(vecs, chain, plus, minus, revlex):
    """Reduced Groebner basis from a square-free universal set.

    vecs[i] is the i-th universal element in reduced coordinates, chain
    the weight vectors in priority order, plus/minus the support masks
    of its positive and negative parts with bit k standing for the k-th
    variable in tiebreak priority.  Returns (index, orientation) pairs,
    orientation +1 meaning the plus part leads.
    """
    m = len(vecs)
    lead = [0] * m
    trail = [0] * m
    orient = [0] * m
    for i in range(m):
        v = vecs[i]
        s = 0
        for w in chain:
            t = 0
            for k in range(len(v)):
                t += w[k] * v[k]
            if t != 0:
                s = 1 if t > 0 else -1
                break
        if s == 0:
            both = plus[i] | minus[i]
            if revlex:
                top = 1 << (both.bit_length() - 1)
                s = 1 if minus[i] & top else -1
            else:
                low = both & -both
                s = 1 if plus[i] & low else -1
        orient[i] = s
        if s > 0:
            lead[i], trail[i] = plus[i], minus[i]
        else:
            lead[i], trail[i] = minus[i], plus[i]
    leads = sorted(set(lead))
    minimal = []
    for L in leads:
        ok = True
        for M in leads:
            if M != L and M & L == M:
                ok = False
                break
        if ok:
            minimal.append(L)
    minset = set(minimal)
    out = []
    seen = set()
    for i in range(m):
        L = lead[i]
        if L not in minset or L in seen:
            continue
        t = trail[i]
        standard = True
        for M in minimal:
            if M & t == M:
                standard = False
                break
        if standard:
            seen.add(L)
            out.append((i, orient[i]))
    return out
