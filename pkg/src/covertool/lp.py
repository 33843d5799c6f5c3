"""Exact rational feasibility of scaled Newton-polyhedron membership.

Membership of a lattice point a in k*NP(I) means: nonnegative rational
weights lambda_j with sum k and sum lambda_j v_j <= a componentwise (v_j the
generator exponent vectors).  Two independent deciders, both over Fraction:

* Fourier-Motzkin elimination, used for small generator counts;
* a primal simplex maximizing sum lambda subject to V^T lambda <= a,
  lambda >= 0 (membership iff the optimum reaches k), Bland's rule, with an
  early exit as soon as the objective passes k.

No floating point anywhere.
"""

from fractions import Fraction

FM_MAX_GENS = 8


def in_scaled_newton(gen_vecs, k, point, method=None):
    """Decide point in k*NP(ideal with generator exponents gen_vecs)."""
    if not gen_vecs:
        return False
    if any(not any(v) for v in gen_vecs):
        return True  # a unit generator absorbs everything
    if method is None:
        method = "fm" if len(gen_vecs) <= FM_MAX_GENS else "simplex"
    if method == "fm":
        return _fm_feasible(gen_vecs, k, point)
    if method == "simplex":
        return _simplex_reaches(gen_vecs, point, Fraction(k))[0]
    raise ValueError(f"unknown LP method {method!r}")


def membership_with_certificate(gen_vecs, k, point):
    """Like in_scaled_newton via simplex, but a negative answer also returns
    the optimal dual functional y >= 0 with y.v_j >= 1 for every generator:
    weak duality then rejects any other point b with y.b < k, so batch scans
    can reuse the certificate as a cheap cut."""
    if any(not any(v) for v in gen_vecs):
        return True, None
    return _simplex_reaches(gen_vecs, point, Fraction(k))


# -- Fourier-Motzkin --------------------------------------------------------

def _fm_feasible(gen_vecs, k, point):
    """Eliminate the lambda variables from
    { lambda >= 0, sum lambda = k, V^T lambda <= point }."""
    m = len(gen_vecs)
    d = len(point)
    rows = []  # (coeffs tuple, const) meaning sum c_j * lambda_j <= const

    # coordinate rows
    for p in range(d):
        rows.append((tuple(Fraction(v[p]) for v in gen_vecs), Fraction(point[p])))
    # nonnegativity
    for j in range(m):
        c = [Fraction(0)] * m
        c[j] = Fraction(-1)
        rows.append((tuple(c), Fraction(0)))
    # equality as two inequalities
    rows.append((tuple(Fraction(1) for _ in range(m)), Fraction(k)))
    rows.append((tuple(Fraction(-1) for _ in range(m)), Fraction(-k)))

    for var in range(m - 1, -1, -1):
        pos, neg, zero = [], [], []
        for coeffs, const in rows:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, const))
            elif c < 0:
                neg.append((coeffs, const))
            else:
                zero.append((coeffs, const))
        new_rows = set()
        for pc, pconst in pos:
            for nc, nconst in neg:
                a, b = pc[var], -nc[var]
                coeffs = tuple(b * pc[j] + a * nc[j] for j in range(var))
                const = b * pconst + a * nconst
                new_rows.add(_normalize(coeffs, const))
        for coeffs, const in zero:
            new_rows.add(_normalize(coeffs[:var], const))
        rows = list(new_rows)
        for coeffs, const in rows:
            if not any(coeffs) and const < 0:
                return False
    return all(const >= 0 for _, const in rows)


def _normalize(coeffs, const):
    scale = max((abs(c) for c in coeffs), default=Fraction(0))
    if scale == 0:
        return coeffs, const
    return tuple(c / scale for c in coeffs), const / scale


# -- simplex ----------------------------------------------------------------

def _simplex_reaches(gen_vecs, point, target):
    """max sum(lambda) s.t. V^T lambda <= point, lambda >= 0.  Returns
    (True, None) as soon as the objective reaches `target` (or is unbounded),
    else (False, dual functional) at optimality.  Full-tableau primal simplex
    with Bland's rule; the all-slack basis is feasible because point >= 0."""
    m = len(gen_vecs)
    d = len(point)
    ncols = m + d
    rows = []
    for p in range(d):
        r = [Fraction(gen_vecs[j][p]) for j in range(m)] + [Fraction(0)] * d \
            + [Fraction(point[p])]
        r[m + p] = Fraction(1)
        rows.append(r)
    cost = [Fraction(1)] * m + [Fraction(0)] * (d + 1)
    basis = [m + p for p in range(d)]

    while True:
        if -cost[-1] >= target:
            return True, None
        col = next((j for j in range(ncols) if cost[j] > 0), None)
        if col is None:
            # optimal below target; dual values sit in the slack reduced costs
            return False, tuple(-cost[m + p] for p in range(d))
        best, piv_row = None, None
        for i in range(d):
            if rows[i][col] > 0:
                ratio = rows[i][-1] / rows[i][col]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[piv_row]):
                    best, piv_row = ratio, i
        if piv_row is None:
            return True, None  # unbounded above
        piv = rows[piv_row][col]
        rows[piv_row] = [x / piv for x in rows[piv_row]]
        for i in range(d):
            if i != piv_row and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv_row])]
        f = cost[col]
        if f:
            cost = [x - f * y for x, y in zip(cost, rows[piv_row])]
        basis[piv_row] = col
