"""Planarity decision, combinatorial embedding, and face enumeration.

The fast path wraps networkx's left-right planarity test (path-addition
family).  A deliberately independent brute-force oracle searches for K5 and
K3,3 subdivisions and is used to cross-validate the fast path on small
graphs.  Faces are walked directly on the rotation system, so Euler's
formula can be checked against any embedding we produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx

from .graph import Graph, connected_components, induced_subgraph, is_connected


class NonPlanarError(ValueError):
    """Raised when an embedding is requested for a non-planar graph.

    ``witness`` carries a Kuratowski subgraph (as a Graph on the original
    vertex labels) when the planarity backend produced one cheaply.
    """

    def __init__(self, message: str, witness: Optional[Graph] = None):
        super().__init__(message)
        self.witness = witness


class DisconnectedError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """A rotation system: for every vertex, the cyclic order of its
    incident neighbors."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def directed_edge_count(self) -> int:
        return sum(len(r) for r in self.rotation)


def _to_networkx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    """True iff g embeds in the plane. Disconnected inputs are fine."""
    n, e = g.n, g.edge_count
    if n <= 4 or e <= 8:
        # a Kuratowski subdivision needs at least nine edges
        return True
    if e > 3 * n - 6:
        return False
    return nx.check_planarity(_to_networkx(g), counterexample=False)[0]


def embed(g: Graph) -> Embedding:
    """A combinatorial embedding of a connected planar graph.

    No canonical embedding is attempted: whichever rotation system the
    left-right algorithm produces first is returned.
    """
    if not is_connected(g):
        raise DisconnectedError("embedding requires a connected graph")
    ok, emb = nx.check_planarity(_to_networkx(g), counterexample=False)
    if not ok:
        _, sub = nx.check_planarity(_to_networkx(g), counterexample=True)
        witness_edges = list(sub.edges())
        witness = Graph(g.n, _adj_from_edges(g.n, witness_edges))
        raise NonPlanarError("graph is not planar", witness=witness)
    data = emb.get_data()
    rotation = tuple(tuple(data[v]) for v in range(g.n))
    return Embedding(rotation)


def _adj_from_edges(n: int, edges) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def faces(emb: Embedding) -> list[tuple[int, ...]]:
    """Face walks of the embedding as cyclic vertex tuples.

    Every directed edge lies on exactly one walk; the walk following (u, v)
    continues with the successor of the reversed edge in the rotation at its
    head.  For the one-vertex graph the single face is the empty walk.
    """
    rot = emb.rotation
    n = emb.n
    if n == 1:
        return [()]
    index = {}
    for v in range(n):
        for i, u in enumerate(rot[v]):
            index[(v, u)] = i
    out: list[tuple[int, ...]] = []
    seen: set[tuple[int, int]] = set()
    for v0 in range(n):
        for u0 in rot[v0]:
            if (v0, u0) in seen:
                continue
            walk = []
            u, v = v0, u0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(u)
                i = index[(v, u)]
                rv = rot[v]
                u, v = v, rv[(i + 1) % len(rv)]
            out.append(tuple(walk))
    return out


def face_count(g: Graph) -> int:
    """Number of faces of some embedding of a connected planar graph."""
    return len(faces(embed(g)))


# ---------------------------------------------------------------------------
# Brute-force Kuratowski oracle.  Independent of the fast path: searches for
# a K5 or K3,3 subdivision by picking branch vertices and then growing
# internally-disjoint paths between the required pairs.
# ---------------------------------------------------------------------------


def _paths_between(g: Graph, a: int, b: int, allowed: int) -> Iterator[int]:
    """Yield masks of internal vertices of simple a-b paths whose internal
    vertices all lie in ``allowed``."""
    if g.adj[a] >> b & 1:
        yield 0
    stack = [(a, 0)]
    # iterative DFS over partial paths; mask = internal vertices used so far
    def walk(v: int, used: int) -> Iterator[int]:
        cand = g.adj[v] & allowed & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            nused = used | low
            if g.adj[w] >> b & 1:
                yield nused
            yield from walk(w, nused)

    yield from walk(a, 0)


def _realize_pairs(g: Graph, pairs: list[tuple[int, int]], branch_mask: int, pool: int) -> bool:
    """Can all required pairs be joined by internally-disjoint paths with
    internal vertices drawn from ``pool``?"""
    if not pairs:
        return True
    a, b = pairs[0]
    for used in _paths_between(g, a, b, pool):
        if _realize_pairs(g, pairs[1:], branch_mask, pool & ~used):
            return True
    return False


def find_kuratowski_subdivision(g: Graph) -> Optional[str]:
    """Search exhaustively for a K5 or K3,3 subdivision; returns a short
    description or None.  Exponential; intended for n <= 9."""
    n = g.n
    verts = [v for v in range(n) if g.adj[v]]
    full = (1 << n) - 1
    # K5: five branch vertices of degree >= 4, ten pairwise paths
    for branch in combinations([v for v in verts if g.degree(v) >= 4], 5):
        bmask = 0
        for v in branch:
            bmask |= 1 << v
        pairs = list(combinations(branch, 2))
        if _realize_pairs(g, pairs, bmask, full & ~bmask):
            return "K5 subdivision on branch vertices %s" % (branch,)
    # K3,3: branch vertices of degree >= 3, split into two triples
    cand = [v for v in verts if g.degree(v) >= 3]
    for six in combinations(cand, 6):
        smask = 0
        for v in six:
            smask |= 1 << v
        for left in combinations(six, 3):
            if six[0] not in left:
                continue  # fix the split to avoid mirror duplicates
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _realize_pairs(g, pairs, smask, full & ~smask):
                return "K3,3 subdivision on parts %s | %s" % (left, right)
    return None


def is_planar_brute(g: Graph) -> bool:
    """Kuratowski-based planarity oracle (independent of the fast path)."""
    return find_kuratowski_subdivision(g) is None


def check_euler(g: Graph) -> bool:
    """For connected planar g: vertices - edges + faces == 2."""
    f = face_count(g)
    return g.n - g.edge_count + f == 2


def planar_components_embeddings(g: Graph) -> list[tuple[list[int], Embedding]]:
    """Per-component embeddings of a planar (possibly disconnected) graph.

    Returns (original vertex list, embedding of the relabeled component).
    """
    out = []
    for comp in connected_components(g):
        vs = [v for v in range(g.n) if comp >> v & 1]
        sub = induced_subgraph(g, vs)
        out.append((vs, embed(sub)))
    return out
