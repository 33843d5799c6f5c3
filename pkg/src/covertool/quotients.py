"""Linear quotients, homological shift ideals, depth tables, analytic spread.

The prefix colon of a sorted generator list is generated by variables iff
every saturated quotient u_j : u_ell is divisible by one of the degree-1
quotients; the degree-1 quotients are then exactly the minimal generators.
That observation keeps the trace loop at O(m^2 * nvars) without any
intermediate minimalization.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, FindingError
from .ideals import MonomialIdeal, cover_ideal, gen_mask, minimalize, power
from .limits import DEFAULT_CAPS
from .rings import OrderSpec, format_mono, mono_deg, order_a


@dataclass(frozen=True)
class QuotientTrace:
    """Per-generator record of the variables generating each prefix colon.

    set_u[i] is a sorted tuple of variable indices when the i-th colon is
    variable-generated, else None; index 0 is always the empty tuple.  A
    failed check carries the first offending 1-based index and one
    non-variable minimal colon generator as witness.
    """

    ring: object
    order: OrderSpec
    sorted_gens: tuple
    set_u: tuple
    ok: bool
    fail_index: int | None = None
    fail_witness: tuple | None = None

    @property
    def max_colon_size(self):
        return max((len(s) for s in self.set_u if s is not None), default=0)

    def colon_gens(self, i):
        """Minimal generators of the i-th prefix colon (0-based gen index)."""
        if self.set_u[i] is None:
            raise ArgumentError("colon is not variable-generated")
        nv = len(self.sorted_gens[0])
        out = []
        for v in self.set_u[i]:
            e = [0] * nv
            e[v] = 1
            out.append(tuple(e))
        return tuple(out)


def linear_quotients_check(ideal, order):
    """Sort the generators descending under `order` and test that every
    prefix colon is generated by variables."""
    if ideal.is_zero or ideal.is_unit:
        raise ArgumentError("linear quotients need a nonzero, non-unit ideal")
    gens = order.sort_desc(ideal.gens)
    set_u = [()]
    for ell in range(1, len(gens)):
        u = gens[ell]
        variables = set()
        quos = []
        for j in range(ell):
            v = gens[j]
            q = tuple(a - b if a > b else 0 for a, b in zip(v, u))
            quos.append(q)
            if sum(q) == 1:
                variables.add(q.index(1))
        bad = None
        for q in quos:
            if sum(q) > 1 and not any(q[v] for v in variables):
                bad = q
                break
        if bad is not None:
            witness = next(w for w in sorted(minimalize(quos), reverse=True)
                           if sum(w) > 1)
            return QuotientTrace(ideal.ring, order, tuple(gens),
                                 tuple(set_u + [None]), ok=False,
                                 fail_index=ell + 1, fail_witness=witness)
        set_u.append(tuple(sorted(variables)))
    return QuotientTrace(ideal.ring, order, tuple(gens), tuple(set_u), ok=True)


def hs_ideal(trace, k):
    """k-th homological shift ideal from a successful trace:
    generated by x_F * u over generators u and k-subsets F of set(u).

    Requires every set(u) to consist of x-class variables; a violation is a
    reportable finding, not an assumption.
    """
    from itertools import combinations

    if not trace.ok:
        raise ArgumentError("hs_ideal needs a successful linear-quotients trace")
    ring = trace.ring
    for s in trace.set_u:
        for v in s or ():
            if not ring.is_x(v):
                raise FindingError(
                    f"prefix colon involves non-x variable {ring.names[v]}",
                    witness=(trace.sorted_gens, v))
    if k == 0:
        return MonomialIdeal.from_gens(ring, trace.sorted_gens)
    gens = []
    for u, s in zip(trace.sorted_gens, trace.set_u):
        if s is None or len(s) < k:
            continue
        for sub in combinations(s, k):
            e = list(u)
            for v in sub:
                e[v] += 1
            gens.append(tuple(e))
    if not gens:
        return MonomialIdeal.zero(ring)
    return MonomialIdeal.from_gens(ring, gens)


# -- depth ------------------------------------------------------------------

@dataclass(frozen=True)
class DepthReport:
    rows: tuple                 # ((k, depth), ...)
    dstab_observed: int
    limit_observed: int

    def csv(self):
        lines = ["k,depth"]
        lines += [f"{k},{d}" for k, d in self.rows]
        return "\n".join(lines) + "\n"


def depth_table(g, k_max, caps=DEFAULT_CAPS):
    """depth of S/J^k for k = 1..k_max via the quotient traces under order A.

    depth = 2n - max|set(u)| - 1 on a successful trace (projective dimension
    of an ideal with linear quotients is the largest colon size).  A trace
    failure aborts with a finding: it would contradict the expected behaviour
    of cover-ideal powers here.
    """
    ideal = cover_ideal(g, caps)
    if ideal.ring.pairs is None or ideal.ring.pairs == 0:
        raise ArgumentError("depth_table needs a labeled graph with >= 1 pair")
    two_n = ideal.ring.nvars
    order = order_a(ideal.ring)
    rows = []
    for k in range(1, k_max + 1):
        pk = power(ideal, k, caps)
        if len(pk.gens) == 1:
            rows.append((k, two_n - 1))
            continue
        trace = linear_quotients_check(pk, order)
        if not trace.ok:
            raise FindingError(
                f"power {k} lost linear quotients under order A at index {trace.fail_index}",
                witness=(k, trace.fail_index, trace.fail_witness))
        rows.append((k, two_n - trace.max_colon_size - 1))
    limit = rows[-1][1]
    dstab = rows[-1][0]
    for k, d in reversed(rows):
        if d != limit:
            break
        dstab = k
    return DepthReport(tuple(rows), dstab, limit)


def analytic_spread(ideal):
    """Rank over the rationals of the generator exponent matrix
    (equigenerated ideals only)."""
    if ideal.is_zero:
        raise ArgumentError("analytic spread of the zero ideal is undefined")
    if not ideal.is_equigenerated():
        raise ArgumentError("analytic_spread needs an equigenerated ideal")
    rows = [[Fraction(e) for e in g] for g in ideal.gens]
    return _rank(rows)


def _rank(rows):
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank, col = 0, 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / pv
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def min_suppy_witnesses(g, caps=DEFAULT_CAPS):
    """For each pair index i, a cover-ideal generator whose smallest y-index
    is i.  A missing index contradicts the structure theory and is surfaced
    as a finding."""
    ideal = cover_ideal(g, caps)
    ring = ideal.ring
    if ring.pairs is None:
        raise ArgumentError("min_suppy_witnesses needs a labeled graph")
    n = ring.pairs
    witnesses = {}
    for u in ideal.gens:
        ys = [i for i in range(1, n + 1) if u[ring.yvar(i)]]
        if ys and min(ys) not in witnesses:
            witnesses[min(ys)] = u
    missing = [i for i in range(1, n + 1) if i not in witnesses]
    if missing:
        raise FindingError(
            f"no generator with minimal y-support index {missing[0]}",
            witness=(missing, ideal.gens))
    return witnesses


def describe_trace(trace):
    """Human-readable per-generator colon summary."""
    ring = trace.ring
    lines = []
    for i, (u, s) in enumerate(zip(trace.sorted_gens, trace.set_u)):
        names = "{}" if s == () else (
            "{" + ",".join(ring.names[v] for v in s) + "}" if s is not None else "FAIL")
        lines.append(f"{i + 1}: {format_mono(ring, u)}  set(u) = {names}")
    return "\n".join(lines)
