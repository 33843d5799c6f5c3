"""Multigraded Betti numbers via reduced homology of upper Koszul complexes.

For a multidegree a, the complex K^a has the faces F subseteq supp(a) with
x^a / x_F in I; beta_{i,a} = dim H~_{i-1}(K^a; Q).  Only multidegrees that
are joins of generator degrees can contribute (Taylor complex), so the box
scan filters candidates down to the lcm lattice before doing any homology.
This route is independent of linear quotients and serves as the oracle for
the homological shift formula.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimitError
from .ideals import MonomialIdeal
from .limits import DEFAULT_CAPS
from .rings import format_mono, mono_divides


@dataclass(frozen=True)
class BettiTable:
    ring: object
    entries: tuple  # ((i, multidegree), value) pairs, sorted; zero entries omitted

    def as_dict(self):
        return dict(self.entries)

    def total(self, i):
        return sum(v for (j, _), v in self.entries if j == i)

    def max_index(self):
        return max((i for (i, _), _ in self.entries), default=-1)

    def degrees_at(self, i):
        return [a for (j, a), _ in self.entries if j == i]

    def ideal_of(self, i):
        """Ideal generated by the multidegrees with nonzero beta_{i,a}."""
        degs = self.degrees_at(i)
        if not degs:
            return MonomialIdeal.zero(self.ring)
        return MonomialIdeal.from_gens(self.ring, degs)

    def rows(self):
        return [(i, format_mono(self.ring, a), v) for (i, a), v in self.entries]


def betti_oracle(ideal, caps=DEFAULT_CAPS):
    if ideal.is_zero:
        return BettiTable(ideal.ring, ())
    if ideal.is_unit:
        return BettiTable(ideal.ring, (((0, ideal.gens[0]), 1),))
    gens = ideal.gens
    nv = ideal.ring.nvars
    lcm = tuple(max(g[p] for g in gens) for p in range(nv))
    box = 1
    for e in lcm:
        box *= e + 1
    if box > caps.betti:
        raise ResourceLimitError(
            f"betti candidate box {box} exceeds cap {caps.betti}",
            cap=caps.betti, reached=box)
    entries = {}
    for a in itertools.product(*[range(e + 1) for e in lcm]):
        divs = [g for g in gens if mono_divides(g, a)]
        if not divs:
            continue
        # candidate must be the join of its divisors (lcm-lattice member)
        join = [0] * nv
        for g in divs:
            for p in range(nv):
                if g[p] > join[p]:
                    join[p] = g[p]
        if tuple(join) != a:
            continue
        support = [p for p in range(nv) if a[p]]
        pos = {p: t for t, p in enumerate(support)}
        facets = []
        for g in divs:
            mask = 0
            for p in support:
                if a[p] - g[p] >= 1:
                    mask |= 1 << pos[p]
            facets.append(mask)
        common = facets[0]
        for m in facets[1:]:
            common &= m
        if common:
            continue  # cone point -> contractible
        for i, b in _reduced_homology(facets):
            entries[(i + 1, a)] = b

    return BettiTable(ideal.ring, tuple(sorted(entries.items())))


def _reduced_homology(facets):
    """Nonzero reduced Betti numbers (dim, value) of the complex generated by
    the facet bitmasks; the empty face is always present."""
    faces = set()
    stack = list(set(facets))
    while stack:
        f = stack.pop()
        if f in faces:
            continue
        faces.add(f)
        m = f
        while m:
            v = m & -m
            stack.append(f & ~v)
            m &= m - 1
    by_card = {}
    for f in faces:
        by_card.setdefault(bin(f).count("1"), []).append(f)
    for c in by_card:
        by_card[c].sort()
    max_card = max(by_card)

    # rank of each boundary map d_c : C[c faces] -> C[c-1 faces]
    rank = {0: 0}  # d from the empty face is zero
    for c in range(1, max_card + 1):
        rows = by_card.get(c, [])
        cols_index = {f: j for j, f in enumerate(by_card.get(c - 1, []))}
        mat = []
        for f in rows:
            row = [0] * len(cols_index)
            sign = 1
            m = f
            while m:
                v = m & -m
                row[cols_index[f & ~v]] = sign
                sign = -sign
                m &= m - 1
            mat.append(row)
        rank[c] = _int_rank(mat)
    out = []
    for c in range(0, max_card + 1):
        dim_c = len(by_card.get(c, []))
        h = dim_c - rank.get(c, 0) - rank.get(c + 1, 0)
        if h:
            out.append((c - 1, h))  # chains with c vertices sit in dimension c-1
    return out


def _int_rank(mat):
    """Exact rank of an integer matrix (elimination over Q)."""
    if not mat or not mat[0]:
        return 0
    rows = [[Fraction(x) for x in r] for r in mat]
    ncols = len(rows[0])
    rank, col = 0, 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / pv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank
