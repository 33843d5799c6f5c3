"""Named example graphs used across the test suite, the docs and the scanner."""

from .graphs import Graph, whisker


def single_pair():
    """Whisker of one vertex: the edge x1-y1."""
    return whisker(Graph.from_edges(1, []))


def whisker_k2():
    """Whisker of K2: edges x1x2, x1y1, x2y2."""
    return whisker(Graph.from_edges(2, [(0, 1)]))


# 12-vertex graph with a valid pairing that is not a whisker (y4, y5, y6 have
# degree > 1); its cover ideal has eight generators.
DEMO12_EDGES = [
    ("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x4", "y4"), ("x5", "y5"),
    ("x6", "y6"),
    ("x1", "x2"), ("x1", "x3"), ("x1", "x4"), ("x1", "x5"), ("x1", "x6"),
    ("x2", "x3"), ("x2", "x4"), ("x2", "x5"), ("x2", "x6"),
    ("x3", "y4"), ("x3", "y5"), ("x3", "y6"), ("x4", "y5"), ("x4", "y6"),
]


def demo12():
    """The 12-vertex Cohen-Macaulay very well-covered demonstration graph."""
    n = 6
    ids = {}
    for i in range(1, n + 1):
        ids[f"x{i}"] = i - 1
        ids[f"y{i}"] = n + i - 1
    edges = [(ids[a], ids[b]) for a, b in DEMO12_EDGES]
    labels = [("x", i + 1) for i in range(n)] + [("y", i + 1) for i in range(n)]
    return Graph.from_edges(2 * n, edges, labels)


def base_path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def base_cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def base_complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def base_empty(n):
    return Graph.from_edges(n, [])


def all_base_graphs(n):
    """Every graph on n labeled vertices, one per edge subset."""
    import itertools
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for r in range(len(pairs) + 1):
        for combo in itertools.combinations(pairs, r):
            yield Graph.from_edges(n, list(combo))
