"""Immutable small-graph value type with exact canonical labeling and graph6 I/O.

Vertices are dense integers 0..n-1 and adjacency rows are stored as Python
int bitmasks, so every hot operation reduces to machine-word bit twiddling.
The hard cap is n <= 64 (graph6 interchange additionally requires n <= 62).
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

MAX_N = 64
GRAPH6_MAX_N = 62


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph; immutable after construction.

    ``adj[u]`` is the neighbor bitmask of vertex ``u``. All operations in
    this package treat Graph as a value: anything that "mutates" builds a
    new instance, which makes concurrent use trivially safe.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)

    # -- basic accessors ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self.adj), reverse=True))

    # -- derived graphs -----------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loop edge (%d,%d)" % (u, v))
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def add_vertex(self, nbr_mask: int) -> "Graph":
        """Return the graph on n+1 vertices where the new vertex is joined
        to exactly the vertices of ``nbr_mask``."""
        if self.n + 1 > MAX_N:
            raise ValueError("vertex cap %d exceeded" % MAX_N)
        if nbr_mask >> self.n:
            raise ValueError("attachment mask uses nonexistent vertices")
        new = self.n
        bit = 1 << new
        adj = [m | bit if nbr_mask >> u & 1 else m for u, m in enumerate(self.adj)]
        adj.append(nbr_mask)
        return Graph(self.n + 1, adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return "Graph(n=%d, edges=%s)" % (self.n, sorted(self.edges()))


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse silently."""
    if not 1 <= n <= MAX_N:
        raise ValueError("vertex count %d outside 1..%d" % (n, MAX_N))
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("edge endpoint out of range: (%d,%d)" % (u, v))
        if u == v:
            raise ValueError("loop edge (%d,%d)" % (u, v))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex u renamed to perm[u]."""
    adj = [0] * g.n
    for u in range(g.n):
        m = g.adj[u]
        t = 0
        while m:
            low = m & -m
            t |= 1 << perm[low.bit_length() - 1]
            m ^= low
        adj[perm[u]] = t
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabeled 0..k-1 preserving order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for v in vs:
        m = g.adj[v]
        t = 0
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if w in pos:
                t |= 1 << pos[w]
            m ^= low
        adj[pos[v]] = t
    return Graph(len(vs), adj)


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = g.adj[v] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Canonical labeling.  The certificate is the maximum, over all vertex
# orderings, of the column-major packed upper-triangle adjacency bits (the
# bit layout of graph6).  Column-major packing determines the bits of a
# partial ordering incrementally, which lets the branch-and-bound prune by
# comparing partial certificates against the best leaf and by discarding
# branches a discovered automorphism maps onto an explored sibling.
# ---------------------------------------------------------------------------


class CanonResult(NamedTuple):
    cert: int                 # packed upper-triangle bits, column-major in canonical order
    form: bytes               # n byte + big-endian cert bytes: the CanonicalForm key
    perm: tuple[int, ...]     # perm[original_vertex] = canonical position
    orbit_of: tuple[int, ...]  # automorphism orbit representative per vertex
    aut_generators: tuple[tuple[int, ...], ...]

    def same_orbit(self, u: int, v: int) -> bool:
        return self.orbit_of[u] == self.orbit_of[v]

    @property
    def last_vertex(self) -> int:
        """The vertex sitting at the final canonical position."""
        return self.perm.index(len(self.perm) - 1)


class _UF:
    __slots__ = ("p",)

    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[max(ra, rb)] = min(ra, rb)


def canonicalize(g: Graph, colors: Optional[Sequence[int]] = None) -> CanonResult:
    """Exact canonical form, optionally respecting an initial vertex coloring.

    With ``colors``, canonical positions carry the sorted color sequence, so
    only same-colored vertices compete for a position; two colored graphs get
    equal certificates iff a color-preserving isomorphism exists.  Placing a
    vertex only ever appends that vertex's adjacency-to-prefix column to the
    certificate, so at every depth only maximum-column candidates can still
    reach the optimum and anything lexicographically below the best leaf's
    prefix is cut.  Leaves tying the best certificate yield automorphisms,
    whose prefix-fixing subgroups prune sibling branches.
    """
    n, adj = g.n, g.adj
    if n == 1:
        return CanonResult(0, bytes([1]), (0,), (0,), ())
    color_of = list(colors) if colors is not None else [0] * n
    req = sorted(color_of)  # color required at each canonical position
    total_bits = n * (n - 1) // 2
    deg = [m.bit_count() for m in adj]

    best_cert = -1
    best_perm: list[int] = []
    gens: list[tuple[int, ...]] = []
    gen_set: set[tuple[int, ...]] = set()
    uf = _UF(n)

    pos_of = [-1] * n      # vertex -> position (current partial assignment)
    order: list[int] = []  # position -> vertex
    col = [0] * n          # adjacency-to-prefix column value per unplaced vertex

    def record_automorphism(pa: Sequence[int], pb: Sequence[int]) -> None:
        # two vertex->position maps with equal certificates; matching up
        # positions yields an automorphism
        inv_b = [0] * n
        for v in range(n):
            inv_b[pb[v]] = v
        sigma = tuple(inv_b[pa[v]] for v in range(n))
        if sigma in gen_set:
            return
        if any(sigma[v] != v for v in range(n)):
            gen_set.add(sigma)
            gens.append(sigma)
            for v in range(n):
                uf.union(v, sigma[v])

    def finish_interchangeable(depth: int, partial: int, rem: list[int], complete: bool) -> None:
        # all remaining vertices are mutually interchangeable: identical
        # color, identical adjacency to the prefix, and pairwise all-adjacent
        # or pairwise non-adjacent; any completion order is optimal and the
        # transpositions among them are genuine automorphisms
        nonlocal best_cert, best_perm
        for i, u in enumerate(rem):
            cu = (col[u] << i) | ((1 << i) - 1 if complete else 0)
            partial = (partial << (depth + i)) | cu
            pos_of[u] = depth + i
        if partial > best_cert:
            best_cert = partial
            best_perm = pos_of.copy()
        elif partial == best_cert:
            record_automorphism(pos_of, best_perm)
        for u in rem:
            pos_of[u] = -1
        anchor = rem[0]
        for u in rem[1:]:
            sigma = list(range(n))
            sigma[anchor], sigma[u] = u, anchor
            record_automorphism_direct(tuple(sigma))

    def record_automorphism_direct(sigma: tuple[int, ...]) -> None:
        if sigma in gen_set or all(sigma[v] == v for v in range(n)):
            return
        gen_set.add(sigma)
        gens.append(sigma)
        for v in range(n):
            uf.union(v, sigma[v])

    def search(depth: int, partial: int) -> None:
        nonlocal best_cert, best_perm
        if depth == n:
            if partial > best_cert:
                best_cert = partial
                best_perm = pos_of.copy()
            elif partial == best_cert:
                record_automorphism(pos_of, best_perm)
            return
        want = req[depth]
        col_best = -1
        ties: list[int] = []
        rem_count = 0
        for u in range(n):
            if pos_of[u] >= 0:
                continue
            rem_count += 1
            if color_of[u] != want:
                continue
            cu = col[u]
            if cu > col_best:
                col_best = cu
                ties = [u]
            elif cu == col_best:
                ties.append(u)
        new_partial = (partial << depth) | col_best
        if best_cert >= 0:
            done_bits = depth * (depth + 1) // 2
            best_prefix = best_cert >> (total_bits - done_bits)
            if new_partial < best_prefix:
                return
        if len(ties) == rem_count:
            rem_mask = 0
            for u in ties:
                rem_mask |= 1 << u
            empty = True
            complete = True
            for u in ties:
                inner = adj[u] & rem_mask
                if inner:
                    empty = False
                if inner != rem_mask ^ (1 << u):
                    complete = False
                if not (empty or complete):
                    break
            if empty or complete:
                finish_interchangeable(depth, partial, ties, complete)
                return
        if len(ties) > 1:
            ties.sort(key=lambda u: -deg[u])
        # sibling pruning: skip a tie that some discovered automorphism
        # fixing the current prefix pointwise maps onto an explored tie;
        # the orbit structure is rebuilt lazily when new generators appear
        tried: list[int] = []
        local_uf: Optional[_UF] = None
        built_gens = -1
        for u in ties:
            if tried and gens:
                if built_gens != len(gens):
                    built_gens = len(gens)
                    fixing = [s for s in gens if all(s[p] == p for p in order)]
                    if fixing:
                        local_uf = _UF(n)
                        for s in fixing:
                            for v in range(n):
                                local_uf.union(v, s[v])
                    else:
                        local_uf = None
                if local_uf is not None:
                    ru = local_uf.find(u)
                    if any(local_uf.find(t) == ru for t in tried):
                        continue
            tried.append(u)
            pos_of[u] = depth
            order.append(u)
            au = adj[u]
            for v in range(n):
                if pos_of[v] < 0:
                    col[v] = (col[v] << 1) | (au >> v & 1)
            search(depth + 1, new_partial)
            for v in range(n):
                if pos_of[v] < 0:
                    col[v] >>= 1
            order.pop()
            pos_of[u] = -1

    # twin vertices (equal open or closed neighborhoods, same color) are
    # automorphic by transposition; seeding them lets sibling pruning fire
    # before any leaf has been visited
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            if color_of[u] != color_of[v]:
                continue
            av = adj[v]
            if au == av or (au >> v & 1 and au ^ (1 << v) == av ^ (1 << u)):
                sigma = list(range(n))
                sigma[u], sigma[v] = v, u
                record_automorphism_direct(tuple(sigma))

    # greedy seed: a single (max column, then max degree) descent yields a
    # strong initial bound so the dominance prune can cut sibling branches
    # near the root
    seed_partial = 0
    seed_order: list[int] = []
    for depth in range(n):
        want = req[depth]
        bu = -1
        bc = -1
        for u in range(n):
            if pos_of[u] >= 0 or color_of[u] != want:
                continue
            cu = col[u]
            if cu > bc or (cu == bc and deg[u] > deg[bu]):
                bu = u
                bc = cu
        seed_partial = (seed_partial << depth) | bc
        pos_of[bu] = depth
        seed_order.append(bu)
        au = adj[bu]
        for v in range(n):
            if pos_of[v] < 0:
                col[v] = (col[v] << 1) | (au >> v & 1)
    best_cert = seed_partial
    best_perm = pos_of.copy()
    for u in seed_order:
        pos_of[u] = -1
    col = [0] * n

    search(0, 0)

    nbytes = (total_bits + 7) // 8
    form = bytes([n]) + best_cert.to_bytes(nbytes, "big")
    orbit_of = tuple(uf.find(v) for v in range(n))
    return CanonResult(best_cert, form, tuple(best_perm), orbit_of, tuple(gens))


def canonical_form(g: Graph) -> bytes:
    """Permutation-invariant key: equal keys iff isomorphic graphs."""
    return canonicalize(g).form


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonicalize(g).cert == canonicalize(h).cert


# -- brute-force oracles (kept deliberately independent of the fast path) ----


def canonical_form_brute(g: Graph) -> bytes:
    """Reference canonical form: maximum certificate over all n! orderings,
    packing the same column-major bit layout as the fast path."""
    n = g.n
    best = -1
    for seq in permutations(range(n)):  # seq[position] = vertex
        cert = 0
        for p in range(1, n):
            ap = g.adj[seq[p]]
            for q in range(p):
                cert = (cert << 1) | (ap >> seq[q] & 1)
        if cert > best:
            best = cert
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([max(n, 1)]) + best.to_bytes(nbytes, "big") if n > 1 else bytes([1])


def is_isomorphic_brute(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    for perm in permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges()) and all(
            g.has_edge(perm.index(u), perm.index(v)) for u, v in h.edges()
        ):
            return True
    return False


def automorphism_orbits_brute(g: Graph) -> tuple[int, ...]:
    """True automorphism orbits by scanning all permutations (test oracle)."""
    n = g.n
    uf = _UF(n)
    edge_set = set(g.edges())
    for perm in permutations(range(n)):
        ok = True
        for u, v in edge_set:
            a, b = perm[u], perm[v]
            if not g.has_edge(a, b):
                ok = False
                break
        if ok and g.edge_count == len(edge_set):
            for v in range(n):
                uf.union(v, perm[v])
    return tuple(uf.find(v) for v in range(n))


# ---------------------------------------------------------------------------
# graph6 interchange (bit-exact per the standard format)
# ---------------------------------------------------------------------------


class Graph6Error(ValueError):
    pass


def encode_graph6(g: Graph) -> bytes:
    """Encode as graph6: byte n+63, then the column-major upper triangle
    packed big-endian six bits per byte, each offset by +63."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error("graph6 supports n <= %d, got %d" % (GRAPH6_MAX_N, n))
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for col in range(1, n):
        colmask = g.adj[col]
        for row in range(col):
            acc = (acc << 1) | (colmask >> row & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error("byte outside printable graph6 range 63..126")
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error("multi-byte graph6 sizes (n > 62) not supported")
    body = data[1:]
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(body) != need_bytes:
        raise Graph6Error(
            "graph6 body length %d, expected %d for n=%d" % (len(body), need_bytes, n)
        )
    adj = [0] * max(n, 1)
    acc = 0
    avail = 0
    src = iter(body)
    for col in range(1, n):
        for row in range(col):
            if avail == 0:
                acc = next(src) - 63
                avail = 6
            bit = (acc >> (avail - 1)) & 1
            avail -= 1
            if bit:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
    if avail and acc & ((1 << avail) - 1):
        raise Graph6Error("nonzero padding bits in final graph6 byte")
    if n == 0:
        raise Graph6Error("graph6 with zero vertices not supported")
    return Graph(n, adj)


def graph6_line(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")
