"""Ambient rings, exponent-vector monomials and lexicographic orders.

A monomial is a plain tuple of non-negative ints (one entry per variable).
For a paired ring K[x_1..x_n, y_1..y_n] the storage layout is interleaved:
index 2(i-1) is x_i and 2(i-1)+1 is y_i.  With that layout the plain
left-to-right lexicographic comparison of exponent tuples is exactly the
order induced by x_1 > y_1 > x_2 > y_2 > ... ("order A"), which doubles as
the canonical storage order of every ideal here.
"""

from dataclasses import dataclass

Exps = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    """Variable-name descriptor.  `pairs` = n when the x/y pairing applies."""

    names: tuple
    pairs: int | None = None

    @property
    def nvars(self):
        return len(self.names)

    def xvar(self, i):
        """Variable index of x_i (1-based i)."""
        return 2 * (i - 1)

    def yvar(self, i):
        """Variable index of y_i (1-based i)."""
        return 2 * (i - 1) + 1

    def is_x(self, v):
        return self.pairs is not None and v % 2 == 0

    def pair_index(self, v):
        """1-based pair index of variable v in a paired ring."""
        return v // 2 + 1


def paired_ring(n):
    names = []
    for i in range(1, n + 1):
        names.append(f"x{i}")
        names.append(f"y{i}")
    return Ring(tuple(names), pairs=n)


def plain_ring(names):
    return Ring(tuple(names), pairs=None)


# -- monomial arithmetic ----------------------------------------------------

def mono_one(nvars):
    return (0,) * nvars


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_quo(a, b):
    """Saturated quotient a : b, componentwise max(a-b, 0)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_support(a):
    return tuple(i for i, e in enumerate(a) if e)


def var_mono(nvars, v, e=1):
    exps = [0] * nvars
    exps[v] = e
    return tuple(exps)


def format_mono(ring, exps):
    parts = []
    for name, e in zip(ring.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- monomial orders --------------------------------------------------------

@dataclass(frozen=True)
class OrderSpec:
    """Lexicographic order given by a priority permutation of variable indices.

    var_order lists variables from most to least significant.  Product orders
    and elimination block orders both collapse to this form: concatenating
    the priority lists of the blocks gives the product of the block orders.
    """

    var_order: tuple
    name: str = "lex"

    def key(self, exps):
        return tuple(exps[i] for i in self.var_order)

    def gt(self, a, b):
        return self.key(a) > self.key(b)

    def sort_desc(self, monos):
        return sorted(monos, key=self.key, reverse=True)


def order_a(ring):
    """x_1 > y_1 > x_2 > y_2 > ... : the identity permutation on the storage layout."""
    return OrderSpec(tuple(range(ring.nvars)), name="A")


def order_b(ring):
    """x_1 > ... > x_n > y_1 > ... > y_n."""
    if ring.pairs is None:
        raise ValueError("order B needs a paired ring")
    n = ring.pairs
    return OrderSpec(tuple(range(0, 2 * n, 2)) + tuple(range(1, 2 * n, 2)), name="B")


def resolve_order(ring, name):
    name = str(name).upper()
    if name == "A":
        return order_a(ring)
    if name == "B":
        return order_b(ring)
    raise ValueError(f"unknown order name: {name!r}")
