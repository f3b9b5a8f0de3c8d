"""Exact subgraph counters: cycles C3..C8, 4-cliques, and 5-vertex paths.

Fast counters enumerate by anchored DFS over adjacency bitmasks so each
copy is generated exactly once; the *_brute variants recount the same
quantities by exhaustive combination/permutation scans and exist purely to
cross-check the fast path.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Literal

from .graph import Graph

MIN_CYCLE = 3
MAX_CYCLE = 8

Pattern = Literal["C3", "C4", "C5", "C6", "K4"]

PATTERNS: tuple[Pattern, ...] = ("C3", "C4", "C5", "C6", "K4")


def _check_cycle_len(k: int) -> None:
    if not MIN_CYCLE <= k <= MAX_CYCLE:
        raise ValueError("cycle length %d outside %d..%d" % (k, MIN_CYCLE, MAX_CYCLE))


def count_cycles(g: Graph, k: int) -> int:
    """Number of k-cycles, each counted once.

    Cycles are rooted at their minimum vertex; the DFS only extends through
    vertices above the root, and the closing step requires the first
    internal vertex to be smaller than the last, which kills the reversed
    traversal.
    """
    _check_cycle_len(k)
    n, adj = g.n, g.adj
    total = 0
    steps = k - 1

    for s in range(n):
        above = -1 << (s + 1)
        start = adj[s] & above
        if not start:
            continue
        sbit = 1 << s
        target = adj[s]

        def walk(v: int, used: int, depth: int, first: int) -> int:
            if depth == steps:
                return 1 if (target >> v & 1) and first < v else 0
            acc = 0
            cand = adj[v] & above & ~used
            while cand:
                low = cand & -cand
                cand ^= low
                acc += walk(low.bit_length() - 1, used | low, depth + 1, first)
            return acc

        cand = start
        while cand:
            low = cand & -cand
            cand ^= low
            v1 = low.bit_length() - 1
            total += walk(v1, sbit | low, 1, v1)
    return total


def count_cycles_through(g: Graph, v: int, k: int) -> int:
    """Number of k-cycles containing vertex v."""
    _check_cycle_len(k)
    if not 0 <= v < g.n:
        raise ValueError("vertex %d out of range" % v)
    adj = g.adj
    steps = k - 1
    target = adj[v]
    vbit = 1 << v

    def walk(u: int, used: int, depth: int, first: int) -> int:
        if depth == steps:
            return 1 if (target >> u & 1) and first < u else 0
        acc = 0
        cand = adj[u] & ~used & ~vbit
        while cand:
            low = cand & -cand
            cand ^= low
            acc += walk(low.bit_length() - 1, used | low, depth + 1, first)
        return acc

    total = 0
    cand = adj[v]
    while cand:
        low = cand & -cand
        cand ^= low
        u1 = low.bit_length() - 1
        total += walk(u1, vbit | low, 1, u1)
    return total


def has_cycle_through(g: Graph, v: int, k: int) -> bool:
    """Early-exit existence test for a k-cycle containing v."""
    _check_cycle_len(k)
    adj = g.adj
    steps = k - 1
    target = adj[v]
    vbit = 1 << v

    def walk(u: int, used: int, depth: int) -> bool:
        if depth == steps:
            return bool(target >> u & 1)
        cand = adj[u] & ~used & ~vbit
        while cand:
            low = cand & -cand
            cand ^= low
            if walk(low.bit_length() - 1, used | low, depth + 1):
                return True
        return False

    cand = adj[v]
    while cand:
        low = cand & -cand
        cand ^= low
        if walk(low.bit_length() - 1, vbit | low, 1):
            return True
    return False


def count_k4(g: Graph) -> int:
    """Number of 4-cliques."""
    n, adj = g.n, g.adj
    total = 0
    for u in range(n):
        au = adj[u] & (-1 << (u + 1))
        cand = au
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            common = au & adj[v] & (-1 << (v + 1))
            inner = common
            while inner:
                lw = inner & -inner
                inner ^= lw
                w = lw.bit_length() - 1
                total += (common & adj[w] & (-1 << (w + 1))).bit_count()
    return total


def has_k4_through(g: Graph, v: int) -> bool:
    """Does some 4-clique contain v?  (Looks for a triangle inside N(v).)"""
    nb = g.adj[v]
    adj = g.adj
    cand = nb
    while cand:
        low = cand & -cand
        cand ^= low
        x = low.bit_length() - 1
        inner = adj[x] & nb & (-1 << (x + 1))
        while inner:
            lw = inner & -inner
            inner ^= lw
            y = lw.bit_length() - 1
            if adj[y] & adj[x] & nb & (-1 << (y + 1)):
                return True
    return False


def count_paths4(g: Graph, u: int, v: int) -> int:
    """Number of simple 5-vertex paths (length four) with endpoints u, v."""
    if u == v:
        raise ValueError("endpoints must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    adj = g.adj
    ends = (1 << u) | (1 << v)
    av = adj[v]
    total = 0
    cand_a = adj[u] & ~ends
    while cand_a:
        la = cand_a & -cand_a
        cand_a ^= la
        a = la.bit_length() - 1
        used_a = ends | la
        cand_b = adj[a] & ~used_a
        while cand_b:
            lb = cand_b & -cand_b
            cand_b ^= lb
            b = lb.bit_length() - 1
            total += (adj[b] & av & ~(used_a | lb)).bit_count()
    return total


def triple_path_total(g: Graph, u1: int, u2: int, u3: int) -> int:
    """Sum of the three pairwise length-four path counts."""
    if len({u1, u2, u3}) != 3:
        raise ValueError("vertices must be distinct")
    return (
        count_paths4(g, u1, u2)
        + count_paths4(g, u2, u3)
        + count_paths4(g, u1, u3)
    )


def has_path_of_length(g: Graph, u: int, v: int, edges: int) -> bool:
    """Early-exit test for a simple u-v path with exactly ``edges`` edges."""
    if edges == 1:
        return bool(g.adj[u] >> v & 1)
    adj = g.adj
    ends_v = 1 << v

    def walk(x: int, used: int, left: int) -> bool:
        if left == 1:
            return bool(adj[x] >> v & 1)
        cand = adj[x] & ~used & ~ends_v
        while cand:
            low = cand & -cand
            cand ^= low
            if walk(low.bit_length() - 1, used | low, left - 1):
                return True
        return False

    return walk(u, (1 << u) | ends_v, edges)


def is_f_free(g: Graph, pattern: Pattern) -> bool:
    """True iff g contains no copy of the forbidden pattern (early exit)."""
    adj = g.adj
    n = g.n
    if pattern == "C3":
        for u in range(n):
            au = adj[u]
            cand = au & (-1 << (u + 1))
            while cand:
                low = cand & -cand
                cand ^= low
                if au & adj[low.bit_length() - 1]:
                    return False
        return True
    if pattern == "C4":
        for u in range(n):
            au = adj[u]
            for v in range(u + 1, n):
                if (au & adj[v]).bit_count() >= 2:
                    return False
        return True
    if pattern == "C5" or pattern == "C6":
        k = 5 if pattern == "C5" else 6
        for v in range(n):
            if has_cycle_through(g, v, k):
                return False
        return True
    if pattern == "K4":
        for v in range(n):
            if has_k4_through(g, v):
                return False
        return True
    raise ValueError("unknown pattern %r" % (pattern,))


def new_vertex_keeps_free(g: Graph, v: int, pattern: Pattern) -> bool:
    """Assuming g minus v is pattern-free, is g still pattern-free?
    Only structures through v need checking."""
    if pattern == "K4":
        return not has_k4_through(g, v)
    k = int(pattern[1])
    return not has_cycle_through(g, v, k)


def edge_addition_keeps_free(g: Graph, u: int, v: int, pattern: Pattern) -> bool:
    """Assuming pattern-free g without edge uv, would g+uv stay free?
    A new cycle C_k through uv corresponds to a u-v path of k-1 edges, and a
    new K4 to an edge inside the common neighborhood."""
    if pattern == "K4":
        common = g.adj[u] & g.adj[v]
        cand = common
        while cand:
            low = cand & -cand
            cand ^= low
            if g.adj[low.bit_length() - 1] & common & (-1 << low.bit_length()):
                return False
        return True
    k = int(pattern[1])
    return not has_path_of_length(g, u, v, k - 1)


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------


def count_cycles_brute(g: Graph, k: int) -> int:
    """Count k-cycles by scanning vertex subsets and cyclic orderings."""
    _check_cycle_len(k)
    total = 0
    for subset in combinations(range(g.n), k):
        anchor = subset[0]
        rest = subset[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue
            cycle = (anchor,) + perm
            if all(
                g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)
            ):
                total += 1
    return total


def count_paths4_brute(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("endpoints must differ")
    others = [x for x in range(g.n) if x != u and x != v]
    total = 0
    for mid in permutations(others, 3):
        seq = (u,) + mid + (v,)
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(4)):
            total += 1
    return total


def count_k4_brute(g: Graph) -> int:
    total = 0
    for quad in combinations(range(g.n), 4):
        if all(g.has_edge(a, b) for a, b in combinations(quad, 2)):
            total += 1
    return total
