"""Toric ideals, Rees presentation ideals, standard monomials, the
l-exchange checker and the structure/quadraticity report.

The kernel of t_j -> u_j (resp. t_j -> u_j * s) is computed by elimination:
pure lex on [base | t] (resp. [s | base | t]) is an elimination order whose
restriction to the kept block equals the target product order, so the
eliminated set is already a basis there and only needs autoreduction.  A
recompletion pass is available via reduced_gb for any other target order.
"""

import itertools
import math
from dataclasses import dataclass

from .errors import ArgumentError, ResourceLimitError
from .groebner import (Binomial, ExtRing, GroebnerBasis, autoreduce,
                       buchberger, elim_order, make_binomial, product_order,
                       reduced_gb, verify_zero_reduction)
from .limits import DEFAULT_CAPS
from .rings import OrderSpec, Ring, mono_deg


def _check_tags(ideal):
    if ideal.is_zero or ideal.is_unit:
        raise ArgumentError("need a nonzero, non-unit monomial ideal")
    return ideal.gens


def toric_ring(ideal):
    return ExtRing(ideal.ring, _check_tags(ideal), elim=False)


def rees_ring(ideal):
    return ExtRing(ideal.ring, _check_tags(ideal), elim=True)


def _kernel_seed(ring):
    """Binomials t_j - tag_j (times s on the tag side when eliminating)."""
    out = []
    nv = ring.nvars
    for j, tag in enumerate(ring.tags):
        t_term = [0] * nv
        t_term[ring.t_index(j)] = 1
        u_term = list(tag) + [0] * (nv - ring.n_base)
        if ring.elim:
            u_term[-1] = 1
        out.append(Binomial(tuple(u_term), tuple(t_term)))
    return out


def toric_ideal(ideal, t_perm=None, caps=DEFAULT_CAPS):
    """Reduced Groebner basis of the toric ideal of the generators, over the
    t-variables only, under the (possibly permuted) t-lex order."""
    if not ideal.is_equigenerated():
        raise ArgumentError("toric_ideal expects an equigenerated ideal")
    ring = toric_ring(ideal)
    order = product_order(ring, t_perm)
    basis = buchberger(_kernel_seed(ring), order, caps)
    m = len(ring.tags)
    nb = ring.n_base
    eliminated = [f for f in basis if not any(f.lead[:nb])]
    t_ring = Ring(tuple(f"t{j + 1}" for j in range(m)))
    projected = [Binomial(f.lead[nb:], f.trail[nb:]) for f in eliminated]
    t_order = OrderSpec(tuple(t_perm) if t_perm is not None else tuple(range(m)),
                        name="t-lex")
    return GroebnerBasis(t_ring, t_order, tuple(autoreduce(projected, t_order)),
                         reduced=True)


def rees_presentation_ideal(ideal, t_perm=None, caps=DEFAULT_CAPS):
    """Generators of the Rees presentation kernel, by eliminating the
    auxiliary variable from t_j - u_j*s.  The result is returned over the
    s-free extended ring and is a (not yet autoreduced) basis under the
    product order."""
    ring = rees_ring(ideal)
    order = elim_order(ring, t_perm)
    basis = buchberger(_kernel_seed(ring), order, caps)
    s_idx = ring.nvars - 1
    eliminated = [f for f in basis if f.lead[s_idx] == 0]
    out_ring = ExtRing(ring.base, ring.tags, elim=False)
    projected = [Binomial(f.lead[:-1], f.trail[:-1]) for f in eliminated]
    return out_ring, projected


def rees_reduced_gb(ideal, t_perm=None, caps=DEFAULT_CAPS):
    """Reduced basis of the Rees presentation ideal under the product order
    (the elimination order restricts to it, so autoreduction suffices)."""
    out_ring, gens = rees_presentation_ideal(ideal, t_perm, caps)
    order = product_order(out_ring, t_perm)
    return GroebnerBasis(out_ring, order, tuple(autoreduce(gens, order)),
                         reduced=True)


def kernel_soundness_failures(ring, elements):
    """Elements whose two terms map to different monomials under the tag
    substitution (checked with the t-degree for Rees-type kernels).
    Sound output is the empty list; applied to 100% of every basis."""
    bad = []
    for f in elements:
        if ring.eval_base(f.lead) != ring.eval_base(f.trail):
            bad.append(f)
    return bad


# -- standard monomials and the exchange condition ---------------------------

def standard_monomials(gb, degree, caps=DEFAULT_CAPS):
    """All degree-N monomials in the t-variables outside the initial ideal."""
    m = gb.ring.nvars
    total = math.comb(m + degree - 1, degree) if degree >= 0 else 0
    if total > caps.std_monomials:
        raise ResourceLimitError(
            f"{total} degree-{degree} monomials exceed cap {caps.std_monomials}",
            cap=caps.std_monomials, reached=total)
    leads = gb.lead_terms()
    out = []
    for combo in itertools.combinations_with_replacement(range(m), degree):
        exps = [0] * m
        for j in combo:
            exps[j] += 1
        exps = tuple(exps)
        if not any(all(x <= y for x, y in zip(l, exps)) for l in leads):
            out.append(exps)
    return out


@dataclass(frozen=True)
class ExchangeReport:
    passed: bool
    checked_pairs: int
    witness: tuple | None = None  # (N, std monomial, std monomial, var index)


def l_exchange_check(ideal, t_perm=None, n_max=2, caps=DEFAULT_CAPS):
    """Exchange condition on ordered pairs of standard monomials, in the
    2n-variable indexing z_{2p-1} = x_p, z_{2p} = y_p (= storage order).

    For a pair whose products first differ at position j with the left side
    smaller, some factor u_k and some later variable z_h with z_h | u_k must
    satisfy z_j * u_k / z_h in G(I)."""
    gens = _check_tags(ideal)
    if not ideal.is_equigenerated():
        raise ArgumentError("l_exchange_check expects an equigenerated ideal")
    genset = set(gens)
    nv = ideal.ring.nvars
    gb = toric_ideal(ideal, t_perm, caps)
    checked = 0
    for n_deg in range(1, n_max + 1):
        stds = standard_monomials(gb, n_deg, caps)
        weights = []
        for s in stds:
            w = [0] * nv
             # product of the tagged generators with multiplicity
            for j, e in enumerate(s):
                if e:
                    for p in range(nv):
                        w[p] += e * gens[j][p]
            weights.append(tuple(w))
        for a in range(len(stds)):
            for b in range(len(stds)):
                if a == b:
                    continue
                wu, wv = weights[a], weights[b]
                j = next((p for p in range(nv) if wu[p] != wv[p]), None)
                if j is None or wu[j] > wv[j]:
                    continue
                checked += 1
                if not _exchange_exists(stds[a], gens, genset, j, nv):
                    return ExchangeReport(False, checked, (n_deg, stds[a], stds[b], j))
    return ExchangeReport(True, checked)


def _exchange_exists(std, gens, genset, j, nv):
    for gi, e in enumerate(std):
        if not e:
            continue
        u = gens[gi]
        for h in range(j + 1, nv):
            if u[h] >= 1:
                cand = list(u)
                cand[h] -= 1
                cand[j] += 1
                if tuple(cand) in genset:
                    return True
    return False


# -- structure of the reduced Rees basis -------------------------------------

@dataclass(frozen=True)
class StructureReport:
    cor411_form: bool
    exceptions: tuple        # offending binomials
    quadratic: bool
    max_degree: int
    mixed: tuple             # the base-variable binomials found
    pure_t: tuple            # the t-only binomials found


def expected_mixed_binomials(ideal):
    """The swap list {x_i t_u - y_i t_u' : u, u' = x_i(u/y_i) both generators},
    enumerated combinatorially (no Groebner computation involved)."""
    ring = toric_ring(ideal)
    gens = ideal.gens
    index = {g: j for j, g in enumerate(gens)}
    n = ideal.ring.pairs
    out = set()
    for j, u in enumerate(gens):
        for i in range(1, n + 1):
            yi, xi = ideal.ring.yvar(i), ideal.ring.xvar(i)
            if u[yi] < 1:
                continue
            swapped = list(u)
            swapped[yi] -= 1
            swapped[xi] += 1
            swapped = tuple(swapped)
            if swapped not in index:
                continue
            lead = [0] * ring.nvars
            lead[xi] = 1
            lead[ring.t_index(j)] = 1
            trail = [0] * ring.nvars
            trail[yi] = 1
            trail[ring.t_index(index[swapped])] = 1
            out.add(Binomial(tuple(lead), tuple(trail)))
    return out


def structure_and_quadraticity_check(gb, ideal, toric_gb=None, t_perm=None,
                                     caps=DEFAULT_CAPS):
    """Classify a reduced Rees basis: every element touching a base variable
    must be a single swap x_i t_u - y_i t_{x_i(u/y_i)}; everything else must
    be a pure t-binomial from the reduced toric basis.  Quadraticity gives
    every variable (x, y and t alike) degree 1."""
    ring = gb.ring
    nb = ring.n_base
    if toric_gb is None:
        toric_gb = toric_ideal(ideal, t_perm, caps)
    toric_set = {(f.lead, f.trail) for f in toric_gb.elements}
    exceptions = []
    mixed, pure = [], []
    max_degree = 0
    for f in gb.elements:
        max_degree = max(max_degree, mono_deg(f.lead), mono_deg(f.trail))
        bl, bt = f.lead[:nb], f.trail[:nb]
        if not any(bl) and not any(bt):
            pure.append(f)
            if (f.lead[nb:], f.trail[nb:]) not in toric_set:
                exceptions.append(f)
            continue
        mixed.append(f)
        if not _is_swap_shape(ring, ideal, f):
            exceptions.append(f)
    return StructureReport(
        cor411_form=not exceptions,
        exceptions=tuple(exceptions),
        quadratic=max_degree == 2,
        max_degree=max_degree,
        mixed=tuple(mixed),
        pure_t=tuple(pure))


def _is_swap_shape(ring, ideal, f):
    nb = ring.n_base
    bl, bt = f.lead[:nb], f.trail[:nb]
    tl, tt = f.lead[nb:], f.trail[nb:]
    if sum(bl) != 1 or sum(bt) != 1 or sum(tl) != 1 or sum(tt) != 1:
        return False
    if 1 not in tl or 1 not in tt:
        return False
    vx, vy = bl.index(1), bt.index(1)
    if not (ideal.ring.is_x(vx) and not ideal.ring.is_x(vy)):
        return False
    if ideal.ring.pair_index(vx) != ideal.ring.pair_index(vy):
        return False
    tag_lead = ring.tags[tl.index(1)]
    tag_trail = ring.tags[tt.index(1)]
    if tag_lead[vy] < 1:
        return False
    swapped = list(tag_lead)
    swapped[vy] -= 1
    swapped[vx] += 1
    return tuple(swapped) == tag_trail
