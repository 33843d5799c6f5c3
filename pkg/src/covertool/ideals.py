"""Monomial ideals over the paired ring, cover-ideal constructions and the
cover swap.

Every MonomialIdeal stores its minimal generating set as an antichain in
canonical order (descending plain lex on the storage layout, i.e. order A
for paired rings).  Equigenerated inputs let minimalization collapse to
deduplication: distinct monomials of one degree never divide each other.
"""

from dataclasses import dataclass, field

from .errors import ArgumentError, ResourceLimitError
from .graphs import (check_cm_vwc_labeling, delete_pairs, minimal_vertex_covers,
                     neighbor_pairs_of_x1)
from .limits import DEFAULT_CAPS
from .rings import (Ring, format_mono, mono_deg, mono_divides, mono_one,
                    mono_quo, paired_ring, plain_ring)


def minimalize(gens):
    """Minimal generating set of the ideal generated by `gens`."""
    gens = set(gens)
    gens.discard(None)
    if not gens:
        return []
    degs = {sum(g) for g in gens}
    if len(degs) == 1:
        return list(gens)
    kept = []
    for g in sorted(gens, key=sum):
        if not any(mono_divides(h, g) for h in kept):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    ring: Ring
    gens: tuple  # antichain, canonical descending order
    masks: tuple | None = field(default=None, compare=False)

    @staticmethod
    def from_gens(ring, gens):
        mins = sorted(minimalize(gens), reverse=True)
        return MonomialIdeal(ring, tuple(mins))

    @staticmethod
    def zero(ring):
        return MonomialIdeal(ring, ())

    @staticmethod
    def unit(ring):
        return MonomialIdeal(ring, (mono_one(ring.nvars),))

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains(self, mono):
        return any(mono_divides(g, mono) for g in self.gens)

    def is_equigenerated(self):
        return len({mono_deg(g) for g in self.gens}) <= 1

    def is_squarefree(self):
        return all(all(e <= 1 for e in g) for g in self.gens)

    def gen_strings(self):
        return [format_mono(self.ring, g) for g in self.gens]

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.gen_strings()) + ")"


def product(a, b):
    if a.ring != b.ring:
        raise ArgumentError("ideal product needs a common ring")
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.ring)
    gens = {tuple(x + y for x, y in zip(u, v)) for u in a.gens for v in b.gens}
    return MonomialIdeal.from_gens(a.ring, gens)


def power(ideal, k, caps=DEFAULT_CAPS):
    """k-th power, minimalizing after every multiplication step."""
    if k < 1:
        raise ArgumentError("power needs k >= 1")
    out = ideal
    for _ in range(k - 1):
        out = product(out, ideal)
    for g in out.gens:
        if any(e >= caps.exponent for e in g):
            raise ResourceLimitError("exponent overflow in ideal power",
                                     cap=caps.exponent)
    return out


def colon_prefix(sorted_gens, ell):
    """Minimal generators of (u_1,..,u_{ell-1}) : u_ell, ell 1-based.

    Uses the gcd reduction: the quotients u_j / gcd(u_j, u_ell) generate the
    colon.  On non-antichain input the unit monomial can appear and is
    returned alone (degenerate colon = unit ideal).
    """
    if not 2 <= ell <= len(sorted_gens):
        raise ArgumentError(f"colon index {ell} out of range 2..{len(sorted_gens)}")
    u = sorted_gens[ell - 1]
    quos = [mono_quo(v, u) for v in sorted_gens[:ell - 1]]
    if any(not any(q) for q in quos):
        return [tuple(0 for _ in u)]
    return sorted(minimalize(quos), reverse=True)


# -- cover ideals -----------------------------------------------------------

def _graph_ring(g):
    if g.labels is not None:
        return paired_ring(g.n_pairs)
    return plain_ring(tuple(f"x{v + 1}" for v in range(g.n_vertices)))


def _var_of_vertex(g, ring, v):
    if g.labels is None:
        return v
    cls, i = g.labels[v]
    return ring.xvar(i) if cls == "x" else ring.yvar(i)


def cover_ideal(g, caps=DEFAULT_CAPS):
    """Ideal generated by the products over the minimal vertex covers.

    For labeled graphs the generators live in the paired ring and each one
    carries its x-index mask (the subset F with generator x_F * y_{[n]\\F}).
    """
    ring = _graph_ring(g)
    report = minimal_vertex_covers(g, caps)
    gens = []
    for cover in report.covers:
        exps = [0] * ring.nvars
        for v in cover:
            exps[_var_of_vertex(g, ring, v)] += 1
        gens.append(tuple(exps))
    if not gens:
        return MonomialIdeal.zero(ring)
    ideal = MonomialIdeal.from_gens(ring, gens)
    if g.labels is not None:
        object.__setattr__(ideal, "masks", tuple(gen_mask(ring, u) for u in ideal.gens))
    return ideal


def gen_mask(ring, gen):
    """x-index subset F of a squarefree paired generator x_F * y_{[n]\\F}."""
    return frozenset(i for i in range(1, ring.pairs + 1) if gen[ring.xvar(i)])


def cover_ideal_recursive(g, caps=DEFAULT_CAPS):
    """Cover ideal by structural recursion on the labeled graph:
    J(G) = z_{N(x1)} J(G_1) + x_1 J(G minus pair 1), with G_1 deleting every
    pair touched by N(x_1).  Requires the paired labeling to check out.
    """
    report = check_cm_vwc_labeling(g)
    if not report.passed:
        raise ArgumentError(
            f"cover_ideal_recursive needs a valid paired labeling; violations: {report.violations}")
    return _cover_rec(g, caps)


def _cover_rec(g, caps):
    n = g.n_pairs if g.labels is not None else 0
    ring = paired_ring(n)
    if n == 0:
        return MonomialIdeal.unit(ring)
    if n == 1:
        return MonomialIdeal.from_gens(ring, [(1, 0), (0, 1)])

    nx, ny = neighbor_pairs_of_x1(g)
    touched = sorted(nx | ny)
    z_exp = [0] * ring.nvars
    for i in nx:
        z_exp[ring.xvar(i)] = 1
    for j in ny:
        z_exp[ring.yvar(j)] = 1

    part1 = _lift(ring, _cover_rec(delete_pairs(g, touched), caps),
                  [i for i in range(1, n + 1) if i not in set(touched)])
    part1 = [tuple(a + b for a, b in zip(z_exp, w)) for w in part1]

    x1_exp = [0] * ring.nvars
    x1_exp[ring.xvar(1)] = 1
    part2 = _lift(ring, _cover_rec(delete_pairs(g, [1]), caps),
                  list(range(2, n + 1)))
    part2 = [tuple(a + b for a, b in zip(x1_exp, w)) for w in part2]

    return MonomialIdeal.from_gens(ring, part1 + part2)


def _lift(ring, sub_ideal, kept_pairs):
    """Expand generators over the deleted-pairs subring back into `ring`,
    mapping new pair r to old pair kept_pairs[r-1]."""
    out = []
    for gen in sub_ideal.gens:
        exps = [0] * ring.nvars
        for r, old in enumerate(kept_pairs, start=1):
            exps[ring.xvar(old)] = gen[2 * (r - 1)]
            exps[ring.yvar(old)] = gen[2 * (r - 1) + 1]
        out.append(tuple(exps))
    return out


def swap_cover(g, gen, i, caps=DEFAULT_CAPS):
    """Replace y_i by x_i in a cover generator; report whether the support of
    the result is again a minimal vertex cover (checked directly)."""
    ring = _graph_ring(g)
    if g.labels is None:
        raise ArgumentError("swap_cover needs a labeled graph")
    yi, xi = ring.yvar(i), ring.xvar(i)
    if gen[yi] < 1:
        raise ArgumentError(f"y{i} does not divide the generator")
    cand = list(gen)
    cand[yi] -= 1
    cand[xi] += 1
    cand = tuple(cand)
    support = set()
    for idx in range(1, ring.pairs + 1):
        if cand[ring.xvar(idx)]:
            support.add(g.x_id(idx))
        if cand[ring.yvar(idx)]:
            support.add(g.y_id(idx))
    is_member = _is_minimal_cover(g, support)
    return cand, is_member


def _is_minimal_cover(g, vertices):
    edges = g.edge_list()
    if any(u not in vertices and v not in vertices for u, v in edges):
        return False
    for w in vertices:
        rest = vertices - {w}
        if all(u in rest or v in rest for u, v in edges):
            return False
    return True
