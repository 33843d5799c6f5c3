"""Simple graphs, whiskering, the paired-labeling checker and cover enumeration.

Vertices are dense 0-based ints.  A labeled graph carries one ('x', i) or
('y', i) tag per vertex (i is the 1-based pair index); the conventional id
layout used by the constructors here is x_i -> i-1, y_i -> n+i-1, but the
checker and all operations work from the tags alone.
"""

from dataclasses import dataclass

from .errors import ArgumentError, LabelingError, ResourceLimitError
from .limits import DEFAULT_CAPS


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    adjacency: tuple          # tuple[frozenset[int], ...]
    labels: tuple | None = None  # per-vertex ('x'|'y', pair index), or None

    @staticmethod
    def from_edges(n_vertices, edges, labels=None):
        adj = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ArgumentError(f"edge ({u},{v}) out of range for {n_vertices} vertices")
            if u == v:
                raise ArgumentError(f"loop at vertex {u} is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        g = Graph(n_vertices, tuple(frozenset(s) for s in adj),
                  tuple(labels) if labels is not None else None)
        if labels is not None:
            g._validate_labels()
        return g

    def _validate_labels(self):
        if len(self.labels) != self.n_vertices:
            raise LabelingError("labels must cover every vertex exactly once")
        if self.n_vertices % 2:
            raise LabelingError("a paired graph needs an even number of vertices")
        n = self.n_vertices // 2
        seen = set()
        for cls, i in self.labels:
            if cls not in ("x", "y") or not 1 <= i <= n:
                raise LabelingError(f"bad label ({cls},{i}) for n={n}")
            if (cls, i) in seen:
                raise LabelingError(f"duplicate label ({cls},{i})")
            seen.add((cls, i))

    # -- basic accessors ----------------------------------------------------

    @property
    def n_pairs(self):
        if self.labels is None:
            raise LabelingError("graph has no (x,y) labeling")
        return self.n_vertices // 2

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def edge_list(self):
        return sorted((u, v) for u in range(self.n_vertices)
                      for v in self.adjacency[u] if u < v)

    def n_edges(self):
        return len(self.edge_list())

    def x_id(self, i):
        return self._label_map()[("x", i)]

    def y_id(self, i):
        return self._label_map()[("y", i)]

    def _label_map(self):
        return {lab: v for v, lab in enumerate(self.labels)}

    def vertex_name(self, v):
        if self.labels is None:
            return f"x{v + 1}"
        cls, i = self.labels[v]
        return f"{cls}{i}"

    def isolated_vertices(self):
        return [v for v in range(self.n_vertices) if not self.adjacency[v]]


def whisker(base):
    """Attach a pendant y_i to every vertex of `base`; result is labeled.

    Base vertices become x_1..x_n in id order; isolated base vertices are fine.
    """
    n = base.n_vertices
    edges = base.edge_list() + [(i, n + i) for i in range(n)]
    labels = [("x", i + 1) for i in range(n)] + [("y", i + 1) for i in range(n)]
    return Graph.from_edges(2 * n, edges, labels)


# -- labeling checker -------------------------------------------------------

@dataclass(frozen=True)
class CmVwcReport:
    passed: bool
    violations: tuple  # of (condition_id, witness vertex tuple)

    def first(self, condition_id):
        for cid, w in self.violations:
            if cid == condition_id:
                return w
        return None


def check_cm_vwc_labeling(g):
    """Check the five structural conditions of the paired labeling.

    Condition ids in the report: 'cover' (X not a minimal vertex cover),
    'independent' (Y not a maximal independent set), and 'ii'..'v'.  The
    first witness found per condition is reported.
    """
    if g.labels is None:
        raise LabelingError("check_cm_vwc_labeling needs a labeled graph")
    n = g.n_pairs
    lab = g._label_map()
    xs = [lab[("x", i)] for i in range(1, n + 1)]
    ys = [lab[("y", i)] for i in range(1, n + 1)]
    xset = set(xs)
    violations = []

    def add(cid, witness):
        if not any(c == cid for c, _ in violations):
            violations.append((cid, tuple(witness)))

    # X a vertex cover, and a minimal one: every x needs an edge to a
    # non-X vertex, otherwise X \ {x} still covers everything.
    for u, v in g.edge_list():
        if u not in xset and v not in xset:
            add("cover", (u, v))
            break
    else:
        for x in xs:
            if not any(w not in xset for w in g.adjacency[x]):
                add("cover", (x,))
                break

    # Y independent and maximal
    yset = set(ys)
    for u, v in g.edge_list():
        if u in yset and v in yset:
            add("independent", (u, v))
            break
    else:
        for x in xs:
            if not (g.adjacency[x] & yset):
                add("independent", (x,))
                break

    # (ii) x_i y_i is an edge
    for i in range(1, n + 1):
        if not g.has_edge(xs[i - 1], ys[i - 1]):
            add("ii", (xs[i - 1], ys[i - 1]))
            break

    # (iii) x_i y_j an edge forces i <= j
    done = False
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i > j and g.has_edge(xs[i - 1], ys[j - 1]):
                add("iii", (xs[i - 1], ys[j - 1]))
                done = True
                break
        if done:
            break

    # (iv) x_i y_j an edge forbids x_i x_j
    done = False
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and g.has_edge(xs[i - 1], ys[j - 1]) and g.has_edge(xs[i - 1], xs[j - 1]):
                add("iv", (xs[i - 1], xs[j - 1]))
                done = True
                break
        if done:
            break

    # (v) z_i x_j, y_j x_k edges force z_i x_k, for distinct i, j, k
    done = False
    for i in range(1, n + 1):
        for z in (xs[i - 1], ys[i - 1]):
            for j in range(1, n + 1):
                if j == i or not g.has_edge(z, xs[j - 1]):
                    continue
                for k in range(1, n + 1):
                    if k in (i, j):
                        continue
                    if g.has_edge(ys[j - 1], xs[k - 1]) and not g.has_edge(z, xs[k - 1]):
                        add("v", (z, xs[j - 1], xs[k - 1]))
                        done = True
                        break
                if done:
                    break
            if done:
                break
        if done:
            break

    return CmVwcReport(passed=not violations, violations=tuple(violations))


# -- minimal vertex covers --------------------------------------------------

@dataclass(frozen=True)
class CoverReport:
    covers: tuple            # tuple[frozenset[int], ...] sorted canonically
    well_covered: bool
    very_well_covered: bool


def _max_independent_sets(g, cap):
    """All maximal independent sets, as bitmasks, via pivoted Bron-Kerbosch
    on the complement graph."""
    n = g.n_vertices
    if n == 0:
        return [0]
    full = (1 << n) - 1
    # complement adjacency as bitmasks
    comp = []
    for v in range(n):
        mask = full & ~(1 << v)
        for w in g.adjacency[v]:
            mask &= ~(1 << w)
        comp.append(mask)
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            if len(out) > cap:
                raise ResourceLimitError(
                    f"more than {cap} maximal independent sets", cap=cap, reached=len(out))
            return
        pux = p | x
        pivot, best = -1, -1
        m = pux
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = bin(p & comp[v]).count("1")
            if deg > best:
                pivot, best = v, deg
        cand = p & ~comp[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            vb = 1 << v
            bk(r | vb, p & comp[v], x & comp[v])
            p &= ~vb
            x |= vb

    bk(0, full, 0)
    return out


def minimal_vertex_covers(g, caps=DEFAULT_CAPS):
    """All minimal vertex covers (complements of maximal independent sets),
    with the well-covered / very-well-covered flags."""
    n = g.n_vertices
    mis = _max_independent_sets(g, caps.covers)
    covers = []
    for mask in mis:
        covers.append(frozenset(v for v in range(n) if not mask & (1 << v)))
    covers.sort(key=lambda c: (len(c), sorted(c)))
    sizes = {len(c) for c in covers}
    well = len(sizes) <= 1
    very = (well and n > 0 and not g.isolated_vertices()
            and 2 * next(iter(sizes)) == n)
    return CoverReport(tuple(covers), well, very)


# -- pair deletion ----------------------------------------------------------

def delete_pairs(g, pairs):
    """Remove {x_i, y_i : i in pairs} and reindex the remaining labels
    order-preservingly."""
    if g.labels is None:
        raise LabelingError("delete_pairs needs a labeled graph")
    n = g.n_pairs
    pairs = set(pairs)
    if not pairs <= set(range(1, n + 1)):
        raise ArgumentError(f"pair indices {sorted(pairs)} not within 1..{n}")
    kept = [i for i in range(1, n + 1) if i not in pairs]
    m = len(kept)
    new_index = {old: new + 1 for new, old in enumerate(kept)}
    old_x = {g.x_id(i): new_index[i] for i in kept}
    old_y = {g.y_id(i): new_index[i] for i in kept}

    def new_id(v):
        if v in old_x:
            return old_x[v] - 1
        if v in old_y:
            return m + old_y[v] - 1
        return None

    edges = []
    for u, v in g.edge_list():
        nu, nv = new_id(u), new_id(v)
        if nu is not None and nv is not None:
            edges.append((nu, nv))
    labels = [("x", i + 1) for i in range(m)] + [("y", i + 1) for i in range(m)]
    return Graph.from_edges(2 * m, edges, labels)


def neighbor_pairs_of_x1(g):
    """Pair indices touched by N(x_1): ({i : x_i ~ x_1}, {j : y_j ~ x_1})."""
    lab = {v: l for v, l in enumerate(g.labels)}
    nx, ny = set(), set()
    for w in g.adjacency[g.x_id(1)]:
        cls, i = lab[w]
        (nx if cls == "x" else ny).add(i)
    return nx, ny
