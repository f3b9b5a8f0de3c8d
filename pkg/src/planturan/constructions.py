"""Generators for every extremal and conjectured family, plus exact
closed-form evaluators for all the bounds they are measured against.

All formulas are evaluated in exact rational arithmetic; floor/ceiling
branches and the mod-3 piecewise cases must be bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Optional

import networkx as nx

from .counting import Pattern, is_f_free
from .graph import Graph, canonical_form, make_graph
from .planarity import is_planar


class NonPlanarTreeShape(ValueError):
    """The requested tree makes the pentagon construction non-planar."""


def _floor_div(a: int, b: int) -> int:
    return a // b


def h_value(n: int) -> Fraction:
    """Closed-form count of 6-cycles in the balanced hub construction,
    piecewise by n mod 3."""
    if n < 6:
        raise ValueError("h(n) needs n >= 6")
    nn = Fraction(n)
    r = n % 3
    if r == 0:
        return nn**3 / 27 + nn**2 / 9 - 2 * nn + 2
    if r == 1:
        return nn**3 / 27 + nn**2 / 9 - 2 * nn + Fraction(50, 27)
    return nn**3 / 27 + nn**2 / 9 - Fraction(17, 9) * nn + Fraction(55, 27)


def h1_value(n: int) -> Fraction:
    """Minimum per-vertex 6-cycle membership in the hub construction."""
    if n < 6:
        raise ValueError("h1(n) needs n >= 6")
    nn = Fraction(n)
    r = n % 3
    if r == 0:
        return (nn / 3) ** 2 - 2
    if r == 1:
        return (nn - 1) / 3 * ((nn + 2) / 3) - 2
    return ((nn + 1) / 3) ** 2 - 2


@dataclass(frozen=True)
class BoundSpec:
    """A theorem bound: which pattern is maximized, which is forbidden,
    whether the value is exact or only an upper bound, and from which n
    the statement applies (``assert_min_n`` is None when the statement only
    holds for sufficiently large n and must never be hard-asserted)."""

    theorem_id: str
    kind: str                     # "exact" | "upper-bound"
    counted: str                  # cycle/clique pattern, or "P5" for path bounds
    forbidden: Optional[Pattern]
    min_n: int
    formula: Callable[[int], Fraction] = field(repr=False)
    assert_min_n: Optional[int] = None

    def value(self, n: int) -> Fraction:
        if n < self.min_n:
            raise ValueError(
                "%s is only defined for n >= %d (got %d)"
                % (self.theorem_id, self.min_n, n)
            )
        return self.formula(n)

    def asserted_at(self, n: int) -> bool:
        return self.assert_min_n is not None and n >= self.assert_min_n


BOUNDS: dict[str, BoundSpec] = {}


def _register(spec: BoundSpec) -> None:
    BOUNDS[spec.theorem_id] = spec


_register(BoundSpec("T_C4C3", "exact", "C4", "C3", 4,
                    lambda n: Fraction(comb(n - 2, 2)), assert_min_n=4))
_register(BoundSpec("T_C4C5", "exact", "C4", "C5", 4,
                    lambda n: Fraction(comb(n - 2, 2)), assert_min_n=4))
_register(BoundSpec("T_C3C4", "upper-bound", "C3", "C4", 4,
                    lambda n: Fraction(5, 7) * (n - 2), assert_min_n=4))
_register(BoundSpec("T_C3K4", "upper-bound", "C3", "K4", 3,
                    lambda n: Fraction(7, 3) * n - 6, assert_min_n=3))
_register(BoundSpec("T_C5C3", "exact", "C5", "C3", 5,
                    lambda n: Fraction(((n - 3) // 2) * ((n - 2) // 2)), assert_min_n=5))
_register(BoundSpec("T_C3C5", "upper-bound", "C3", "C5", 5,
                    lambda n: Fraction(_floor_div(8 * n - 22, 5)), assert_min_n=11))
_register(BoundSpec("T_C3C6", "upper-bound", "C3", "C6", 5,
                    lambda n: Fraction(35 * n - 98, 18), assert_min_n=18))
_register(BoundSpec("T_C6C3", "exact", "C6", "C3", 6,
                    lambda n: h_value(n), assert_min_n=None))
_register(BoundSpec("T_P5pair", "upper-bound", "C5", None, 5,
                    lambda n: (Fraction(n - 1, 2)) ** 2 - 2, assert_min_n=5))
_register(BoundSpec("T_P5triple", "upper-bound", "C5", None, 5,
                    lambda n: 3 * (Fraction(n + 1, 3)) ** 2 - 6, assert_min_n=5))


def formula_value(theorem_id: str, n: int) -> Fraction:
    """Exact rational value of a registered bound at n."""
    if theorem_id not in BOUNDS:
        raise KeyError("unknown theorem id %r" % theorem_id)
    return BOUNDS[theorem_id].value(n)


# ---------------------------------------------------------------------------
# Extremal constructions
# ---------------------------------------------------------------------------


def build_k2_bipartite(n: int) -> Graph:
    """K_{2,n-2}: the unique triangle-free planar maximizer of 4-cycles."""
    if n < 4:
        raise ValueError("need n >= 4")
    return make_graph(n, [(a, b) for a in (0, 1) for b in range(2, n)])


@dataclass(frozen=True)
class JnSpec:
    """Pentagon-derived construction: apexes u, v; c common neighbors; and a
    spanning tree between the apex-private classes given as an edge list on
    tree vertices 0..s-1 (s = n - 2 - c).  The color class containing tree
    vertex 0 attaches to u, the other to v."""

    n: int
    c: int
    tree: tuple[tuple[int, int], ...]

    @property
    def tree_size(self) -> int:
        return self.n - 2 - self.c

    def color_classes(self) -> tuple[list[int], list[int]]:
        s = self.tree_size
        adj: list[list[int]] = [[] for _ in range(s)]
        for a, b in self.tree:
            adj[a].append(b)
            adj[b].append(a)
        color = [-1] * s
        color[0] = 0
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    stack.append(y)
        if any(c == -1 for c in color):
            raise ValueError("tree edges do not span the tree vertices")
        side_a = [i for i in range(s) if color[i] == 0]
        side_b = [i for i in range(s) if color[i] == 1]
        return side_a, side_b

    @property
    def balanced(self) -> bool:
        return abs(self.c - (self.tree_size - 1)) <= 1

    def validate(self) -> None:
        s = self.tree_size
        if self.c < 1:
            raise ValueError("need at least one common neighbor")
        if s < 2:
            raise ValueError("tree needs at least two vertices")
        if len(self.tree) != s - 1:
            raise ValueError("a tree on %d vertices has %d edges" % (s, s - 1))
        self.color_classes()  # raises if not spanning/connected enough


def default_jn_spec(n: int) -> JnSpec:
    """Balanced default: the remainder goes to the common-neighbor class and
    the tree is an alternating path starting in the u-side class."""
    if n < 5:
        raise ValueError("need n >= 5")
    c = (n - 2) // 2  # ceil((n-3)/2)
    s = n - 2 - c
    tree = tuple((i, i + 1) for i in range(s - 1))
    return JnSpec(n, c, tree)


def build_jn(spec: JnSpec) -> Graph:
    """Realize the pentagon construction; validates planarity post hoc.

    Vertex layout: u=0, v=1, common neighbors 2..c+1, tree vertex t at
    2+c+t.  Unbalanced specs build fine but count fewer 5-cycles.
    """
    spec.validate()
    side_a, side_b = spec.color_classes()
    u, v = 0, 1
    base = 2 + spec.c
    edges = [(u, w) for w in range(2, base)] + [(v, w) for w in range(2, base)]
    edges += [(u, base + t) for t in side_a]
    edges += [(v, base + t) for t in side_b]
    edges += [(base + a, base + b) for a, b in spec.tree]
    g = make_graph(spec.n, edges)
    if not is_f_free(g, "C3"):
        raise AssertionError("pentagon construction must be triangle-free")
    if not is_planar(g):
        raise NonPlanarTreeShape(
            "tree shape makes the pentagon construction non-planar"
        )
    return g


def enumerate_jn(n: int, max_n: int = 12) -> list[Graph]:
    """All planar members of the pentagon class on n vertices, up to
    isomorphism, over every balanced (c, tree) choice."""
    if n < 5:
        raise ValueError("need n >= 5")
    if n > max_n:
        raise ValueError("tree enumeration is only feasible for n <= %d" % max_n)
    out: list[Graph] = []
    seen: set[bytes] = set()
    for c in range(1, n - 3):
        s = n - 2 - c
        if s < 2 or abs(c - (s - 1)) > 1:
            continue
        for tree in nx.nonisomorphic_trees(s):
            spec = JnSpec(n, c, tuple(sorted(tuple(sorted(e)) for e in tree.edges())))
            try:
                g = build_jn(spec)
            except NonPlanarTreeShape:
                continue
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def build_hn(n: int) -> Graph:
    """Hub construction: three hubs, two vertices joined to every hub, and
    three balanced independent sets each joined to a distinct hub pair.

    Layout: hubs 0,1,2; shared vertices 3,4; then the three classes in
    order (first class joined to hubs 0,1; second to 1,2; third to 0,2).
    Remainders go to the earlier class.
    """
    if n < 6:
        raise ValueError("need n >= 6")
    free = n - 5
    q, r = divmod(free, 3)
    sizes = [q + (1 if i < r else 0) for i in range(3)]
    hub_pairs = [(0, 1), (1, 2), (0, 2)]
    edges = [(h, z) for h in (0, 1, 2) for z in (3, 4)]
    nxt = 5
    for size, (ha, hb) in zip(sizes, hub_pairs):
        for _ in range(size):
            edges += [(ha, nxt), (hb, nxt)]
            nxt += 1
    return make_graph(n, edges)


def hn_class_sizes(n: int) -> tuple[int, int, int]:
    free = n - 5
    q, r = divmod(free, 3)
    return tuple(q + (1 if i < r else 0) for i in range(3))  # type: ignore[return-value]


def build_k4_stack(t: int) -> Graph:
    """Nested-triangle construction: start from a triangle and repeatedly
    insert a new triangle into the innermost triangular face, joining old
    and new along a 6-cycle.  Gives 3t vertices, 7t-6 triangles, no K4."""
    if t < 1:
        raise ValueError("need t >= 1")
    edges = [(0, 1), (1, 2), (2, 0)]
    for layer in range(1, t):
        a, b, c = 3 * (layer - 1), 3 * (layer - 1) + 1, 3 * (layer - 1) + 2
        a2, b2, c2 = 3 * layer, 3 * layer + 1, 3 * layer + 2
        edges += [(a2, b2), (b2, c2), (c2, a2)]
        edges += [(a2, a), (a2, b), (b2, b), (b2, c), (c2, c), (c2, a)]
    return make_graph(3 * t, edges)


def build_g_even(n: int, k: int) -> Graph:
    """Even-cycle conjecture construction: a 2k-cycle with every other
    vertex blown up in a balanced way, all blow-ups sharing two vertices.

    Layout: hubs 0..k-1, shared pair k,k+1, then the private parts of the
    blow-up classes in order; class i sits between hubs i and i+1 (mod k).
    """
    if k < 2:
        raise ValueError("need k >= 2")
    if n < 2 * k + 2:
        raise ValueError("need n >= 2k+2 = %d" % (2 * k + 2))
    free = n - k - 2
    q, r = divmod(free, k)
    sizes = [q + (1 if i < r else 0) for i in range(k)]
    edges = []
    for h in range(k):
        for z in (k, k + 1):
            edges.append((h, z))
    nxt = k + 2
    for i, size in enumerate(sizes):
        ha, hb = i, (i + 1) % k
        for _ in range(size):
            edges += [(ha, nxt), (hb, nxt)]
            nxt += 1
    g = make_graph(n, edges)
    if not is_planar(g) or not is_f_free(g, "C3"):
        raise AssertionError("even-cycle construction must be planar and triangle-free")
    return g


def build_g_odd(n: int, k: int) -> Graph:
    """Odd-cycle conjecture construction: a (2k+1)-cycle whose even
    positions are blown up (all blow-ups sharing two vertices joined to
    every odd position) and whose last edge is replaced by a tree.

    The shared pair is joined to all k hub (odd) positions; with k = 2 the
    shared pair simply enlarges the single blown class, which reproduces
    the pentagon family.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    if n < 2 * k + 3:
        raise ValueError("need n >= 2k+3 = %d" % (2 * k + 3))
    # slot sizes: k-1 blown classes (each implicitly containing the shared
    # pair) and the tree slot; balance |S_i| against |A u B| - 1
    free = n - k - 2
    total = free + 2 * (k - 1) - 1  # sum of the k balanced quantities
    q, r = divmod(total, k)
    targets = [q + (1 if i < r else 0) for i in range(k)]
    blown_sizes = [t - 2 for t in targets[:-1]]  # private part of each class
    tree_size = targets[-1] + 1
    if any(s < 0 for s in blown_sizes) or tree_size < 2:
        raise ValueError("n too small to balance the construction")
    hubs = list(range(k))
    z1, z2 = k, k + 1
    edges = [(h, z) for h in hubs for z in (z1, z2)]
    nxt = k + 2
    for i in range(k - 1):
        ha, hb = hubs[i], hubs[i + 1]
        for _ in range(blown_sizes[i]):
            edges += [(ha, nxt), (hb, nxt)]
            nxt += 1
    # alternating path tree between the last hub and the first hub
    side_a_hub, side_b_hub = hubs[-1], hubs[0]
    tree_vertices = list(range(nxt, nxt + tree_size))
    for idx, tv in enumerate(tree_vertices):
        edges.append((side_a_hub if idx % 2 == 0 else side_b_hub, tv))
    for a, b in zip(tree_vertices, tree_vertices[1:]):
        edges.append((a, b))
    g = make_graph(n, edges)
    if not is_planar(g) or not is_f_free(g, "C3"):
        raise AssertionError("odd-cycle construction must be planar and triangle-free")
    return g
