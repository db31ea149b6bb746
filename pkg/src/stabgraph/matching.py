"""Maximum matching and Koenig duality for bipartite graphs.

Hopcroft-Karp with deterministic vertex order, the constructive minimum
vertex cover / maximum stable set pair, the stable and matching cores
(vertices in every stability system, edges in every maximum matching), and
the stability-preserving spanning tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Bipartition, Edge, Graph, GraphError, is_connected, normalize_edge

_INF = float("inf")


class NotConnectedError(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    """Set of pairwise non-incident edges with a partner map.

    ``partner[v]`` is the matched partner of v, or -1. ``size`` is the
    number of edges.
    """

    edges: frozenset[Edge]
    partner: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def partner_of(self, v: int) -> int | None:
        w = self.partner[v]
        return None if w == -1 else w

    def covers(self, v: int) -> bool:
        return self.partner[v] != -1

    def is_perfect(self, n: int) -> bool:
        return 2 * self.size == n


@dataclass(frozen=True)
class StableSet:
    members: frozenset[int]
    is_maximum: bool = False


def matching_from_pairs(pair: list[int]) -> Matching:
    edges = frozenset(
        normalize_edge(v, w) for v, w in enumerate(pair) if w != -1 and v < w
    )
    return Matching(edges=edges, partner=tuple(pair))


def matching_from_edges(n: int, edges: frozenset[Edge] | set[Edge]) -> Matching:
    pair = [-1] * n
    for u, v in edges:
        if pair[u] != -1 or pair[v] != -1:
            raise GraphError("edges share an endpoint; not a matching")
        pair[u] = v
        pair[v] = u
    return Matching(edges=frozenset(normalize_edge(u, v) for u, v in edges), partner=tuple(pair))


def _hopcroft_karp(g: Graph, left: list[int]) -> list[int]:
    """Maximum matching as a partner array; deterministic in vertex order."""
    pair = [-1] * g.n
    dist: dict[int, float] = {}
    free_dist = _INF

    def bfs() -> bool:
        nonlocal free_dist
        queue: deque[int] = deque()
        for u in left:
            if pair[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        free_dist = _INF
        while queue:
            u = queue.popleft()
            if dist[u] >= free_dist:
                continue
            for v in g.adj[u]:
                w = pair[v]
                if w == -1:
                    free_dist = min(free_dist, dist[u] + 1)
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return free_dist != _INF

    def dfs(u: int) -> bool:
        for v in g.adj[u]:
            w = pair[v]
            if w == -1:
                if dist[u] + 1 == free_dist:
                    pair[u] = v
                    pair[v] = u
                    return True
            elif dist[w] == dist[u] + 1 and dfs(w):
                pair[u] = v
                pair[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in left:
            if pair[u] == -1:
                dfs(u)
    return pair


def maximum_matching(g: Graph, b: Bipartition) -> Matching:
    """Deterministic maximum matching via Hopcroft-Karp."""
    left = sorted(b.class_a)
    return matching_from_pairs(_hopcroft_karp(g, left))


def _augment(g: Graph, pair: list[int], start: int, banned: frozenset[int] = frozenset()) -> bool:
    """Try one alternating augmentation from the free vertex ``start``.

    Works from either side of the bipartition; mutates ``pair`` only on
    success. ``banned`` vertices are treated as deleted.
    """
    visited: set[int] = set()

    def dfs(u: int) -> bool:
        for v in g.adj[u]:
            if v in banned or v in visited:
                continue
            visited.add(v)
            w = pair[v]
            if w == -1 or (w not in banned and dfs(w)):
                pair[u] = v
                pair[v] = u
                return True
        return False

    return dfs(start)


def mu(g: Graph, b: Bipartition) -> int:
    return maximum_matching(g, b).size


def alpha(g: Graph, b: Bipartition) -> int:
    """Stability number via the Koenig identity alpha + mu = n."""
    return g.n - maximum_matching(g, b).size


def konig_cover(g: Graph, b: Bipartition, m: Matching) -> frozenset[int]:
    """Minimum vertex cover (A - Z) | (B & Z), Z the alternating-reachable
    set from unmatched class-A vertices."""
    reached: set[int] = set()
    queue: deque[int] = deque()
    for u in sorted(b.class_a):
        if not m.covers(u):
            reached.add(u)
            queue.append(u)
    while queue:
        u = queue.popleft()  # u is always on the A side here
        for v in g.adj[u]:
            if v in reached or m.partner[u] == v:
                continue
            reached.add(v)
            w = m.partner[v]
            if w != -1 and w not in reached:
                reached.add(w)
                queue.append(w)
    cover = (set(b.class_a) - reached) | (set(b.class_b) & reached)
    return frozenset(cover)


def maximum_stable_set(g: Graph, b: Bipartition) -> StableSet:
    """Complement of the Koenig cover; size equals alpha(G)."""
    m = maximum_matching(g, b)
    cover = konig_cover(g, b, m)
    return StableSet(members=frozenset(range(g.n)) - cover, is_maximum=True)


def has_perfect_matching(g: Graph, b: Bipartition) -> bool:
    return 2 * maximum_matching(g, b).size == g.n


def stable_core(g: Graph, b: Bipartition) -> frozenset[int]:
    """Vertices contained in every stability system: alpha(G-v) = alpha - 1.

    Equivalently (via Koenig) the vertices covered by *every* maximum
    matching fail the test; v is in the core iff mu(G-v) = mu(G), checked by
    one warm-started augmentation.
    """
    m = maximum_matching(g, b)
    core = []
    for v in range(g.n):
        w = m.partner[v]
        if w == -1:
            core.append(v)
            continue
        pair = list(m.partner)
        pair[v] = -1
        pair[w] = -1
        if _augment(g, pair, w, banned=frozenset((v,))):
            core.append(v)
    return frozenset(core)


def matching_core(g: Graph, b: Bipartition) -> frozenset[Edge]:
    """Edges contained in every maximum matching: mu(G-e) = mu - 1.

    Only edges of one stored maximum matching are candidates; for each, the
    edge is deleted and a single augmentation is attempted from both freed
    endpoints.
    """
    m = maximum_matching(g, b)
    core = []
    for e in sorted(m.edges):
        u, v = e
        g2 = g.remove_edge(e)
        pair = list(m.partner)
        pair[u] = -1
        pair[v] = -1
        if not (_augment(g2, pair, u) or _augment(g2, pair, v)):
            core.append(e)
    return frozenset(core)


def alpha_preserving_spanning_tree(g: Graph, b: Bipartition) -> Graph:
    """Spanning tree containing a maximum matching, with alpha(T) = alpha(G).

    The matching edges are the K2 cliques of a minimum clique cover; adding
    only component-joining edges keeps alpha at n - mu.
    """
    if not is_connected(g):
        raise NotConnectedError("spanning tree requires a connected graph")
    m = maximum_matching(g, b)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree_edges: list[Edge] = []
    for e in sorted(m.edges):
        ru, rv = find(e[0]), find(e[1])
        parent[ru] = rv
        tree_edges.append(e)
    for e in g.edge_list():
        ru, rv = find(e[0]), find(e[1])
        if ru != rv:
            parent[ru] = rv
            tree_edges.append(e)
    from .graph import build_graph

    return build_graph(g.n, tree_edges)
