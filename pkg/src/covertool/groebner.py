"""Binomial Buchberger engine with product/elimination orders.

All ideals handled here are kernels of monomial maps, so every S-polynomial
and every reduction step stays a difference of two monic monomials (or
vanishes).  A reduction that would leave that class aborts hard: it would
falsify the toric assumption rather than deserve a workaround.

Extended rings place the 2n base variables first (interleaved storage), then
one t-variable per tagged generator, then an optional elimination variable.
Pure lex on that layout is simultaneously the product order (base lex, then
t-lex) and an elimination order for the base block.
"""

import heapq
from dataclasses import dataclass

from .errors import ArgumentError, CovertoolError, ResourceLimitError
from .limits import DEFAULT_CAPS
from .rings import OrderSpec, Ring, format_mono, mono_lcm


@dataclass(frozen=True)
class ExtRing:
    """Base ring extended by one t-variable per generator tag, plus an
    optional trailing elimination variable."""

    base: Ring
    tags: tuple              # generator exponent vectors over base, canonical order
    elim: bool = False

    @property
    def names(self):
        t = tuple(f"t{j + 1}" for j in range(len(self.tags)))
        s = ("s",) if self.elim else ()
        return self.base.names + t + s

    @property
    def nvars(self):
        return self.base.nvars + len(self.tags) + (1 if self.elim else 0)

    @property
    def n_base(self):
        return self.base.nvars

    def t_index(self, j):
        return self.base.nvars + j

    def base_part(self, exps):
        return exps[:self.base.nvars]

    def t_part(self, exps):
        return exps[self.base.nvars:self.base.nvars + len(self.tags)]

    def eval_base(self, exps):
        """Image of a monomial under the tag substitution t_j -> tag_j,
        returned as (base exponent vector, total t-degree)."""
        out = list(self.base_part(exps))
        tdeg = 0
        for j, e in enumerate(self.t_part(exps)):
            if e:
                tdeg += e
                tag = self.tags[j]
                for p in range(self.base.nvars):
                    out[p] += e * tag[p]
        return tuple(out), tdeg


def product_order(ring, t_perm=None):
    """Base lex (order A layout) first, then lex on the t-block; the
    elimination variable, when present, is least significant."""
    m = len(ring.tags)
    t_perm = tuple(t_perm) if t_perm is not None else tuple(range(m))
    if sorted(t_perm) != list(range(m)):
        raise ArgumentError("t_perm must be a permutation of the tag indices")
    prio = tuple(range(ring.n_base)) + tuple(ring.t_index(j) for j in t_perm)
    if ring.elim:
        prio += (ring.n_base + m,)
    return OrderSpec(prio, name="product")


def elim_order(ring, t_perm=None):
    """Elimination variable dominant, then the product order."""
    if not ring.elim:
        raise ArgumentError("ring has no elimination variable")
    inner = product_order(ring, t_perm)
    s_idx = ring.nvars - 1
    prio = (s_idx,) + tuple(v for v in inner.var_order if v != s_idx)
    return OrderSpec(prio, name="elim")


@dataclass(frozen=True)
class Binomial:
    lead: tuple
    trail: tuple

    def terms(self):
        return (self.lead, self.trail)

    def text(self, ring):
        return f"{format_mono(ring, self.lead)} - {format_mono(ring, self.trail)}"


def make_binomial(a, b, order):
    """Oriented binomial a - b, or None when the terms coincide."""
    if a == b:
        return None
    return Binomial(a, b) if order.gt(a, b) else Binomial(b, a)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    order: OrderSpec
    elements: tuple
    reduced: bool = False

    def lead_terms(self):
        return [e.lead for e in self.elements]

    def texts(self):
        return [e.text(self.ring) for e in self.elements]


def _reduce_term(t, basis):
    """Normal form of a single term against the leads of `basis`.

    Deterministic: always rewrites by the first applicable element in the
    basis list.  Terminates because each step strictly drops in the order.
    """
    changed = True
    while changed:
        changed = False
        for g in basis:
            gl = g.lead
            ok = True
            for x, y in zip(gl, t):
                if x > y:
                    ok = False
                    break
            if ok:
                t = tuple(y - x + z for x, y, z in zip(gl, t, g.trail))
                changed = True
                break
    return t


def reduce_binomial(f, basis, order):
    """Full normal form of a binomial; None when it reduces to zero."""
    a = _reduce_term(f.lead, basis)
    b = _reduce_term(f.trail, basis)
    return make_binomial(a, b, order)


def s_binomial(f, g, order):
    lcm = mono_lcm(f.lead, g.lead)
    a = tuple(l - x + y for l, x, y in zip(lcm, f.lead, f.trail))
    b = tuple(l - x + y for l, x, y in zip(lcm, g.lead, g.trail))
    return make_binomial(a, b, order)


def buchberger(gens, order, caps=DEFAULT_CAPS):
    """Complete `gens` to a Groebner basis.  Normal selection strategy
    (minimal lcm degree first, canonical tie-break); Buchberger's product
    criterion prunes coprime-lead pairs."""
    basis = []
    for f in gens:
        nf = make_binomial(f.lead, f.trail, order)
        if nf is not None:
            basis.append(nf)
    heap = []
    counter = 0

    def push_pairs(new_index):
        nonlocal counter
        g = basis[new_index]
        for i in range(new_index):
            f = basis[i]
            if all(x == 0 or y == 0 for x, y in zip(f.lead, g.lead)):
                continue  # product criterion
            lcm = mono_lcm(f.lead, g.lead)
            counter += 1
            heapq.heappush(heap, (sum(lcm), order.key(lcm), counter, i, new_index))

    for idx in range(len(basis)):
        push_pairs(idx)

    processed = 0
    while heap:
        processed += 1
        if processed > caps.spairs:
            raise ResourceLimitError(
                f"S-pair cap {caps.spairs} exceeded (basis size {len(basis)})",
                cap=caps.spairs, reached=processed)
        _, _, _, i, j = heapq.heappop(heap)
        s = s_binomial(basis[i], basis[j], order)
        if s is None:
            continue
        nf = reduce_binomial(s, basis, order)
        if nf is None:
            continue
        if nf.lead == nf.trail:
            raise CovertoolError("non-binomial remainder: input was not toric")
        basis.append(nf)
        push_pairs(len(basis) - 1)
    return basis


def autoreduce(basis, order):
    """Unique reduced basis of an already-complete basis: prune redundant
    leads, then tail-reduce every survivor against all the others."""
    # ascending scan: a divisor of a lead is <= it in the order, so any lead
    # that makes f redundant is already in `kept`
    elems = sorted(set(basis), key=lambda f: (order.key(f.lead), order.key(f.trail)))
    kept = []
    for f in elems:
        if not any(all(x <= y for x, y in zip(g.lead, f.lead)) for g in kept):
            kept.append(f)
    out = []
    for f in kept:
        others = [g for g in kept if g is not f]
        trail = _reduce_term(f.trail, others)
        nf = make_binomial(f.lead, trail, order)
        if nf is not None:
            out.append(nf)
    out.sort(key=lambda f: (order.key(f.lead), order.key(f.trail)), reverse=True)
    return out


def reduced_gb(gens, order, caps=DEFAULT_CAPS, complete=True):
    """Buchberger completion followed by autoreduction.  With complete=False
    the input is trusted to be a basis already and only autoreduced."""
    if not gens:
        return []
    basis = buchberger(gens, order, caps) if complete else list(gens)
    return autoreduce(basis, order)


def verify_zero_reduction(elements, order):
    """Exhaustive Buchberger check: every S-binomial reduces to zero.
    Returns the first offending pair or None."""
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = s_binomial(elements[i], elements[j], order)
            if s is None:
                continue
            if reduce_binomial(s, elements, order) is not None:
                return (i, j)
    return None
