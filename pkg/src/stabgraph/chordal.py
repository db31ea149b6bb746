"""Chordal recognition and the chordal / tree stability characterizations.

Lexicographic BFS produces a candidate perfect elimination order; verifying
it decides chordality, and a failed verification is turned into a chordless
cycle witness. On chordal graphs the greedy stable set along the elimination
order is maximum, and alpha-minus-stability reduces to that set being
2-dominating (in which case it is the unique stability system).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import (
    Bipartition,
    Graph,
    bipartition,
    is_connected,
    is_n_dominating,
    pendant_vertices,
)
from .matching import Matching, StableSet, matching_from_edges


class NotChordalError(ValueError):
    pass


class NotATreeError(ValueError):
    pass


class OrderTooSmallError(ValueError):
    pass


class InvalidPEOError(ValueError):
    pass


@dataclass(frozen=True)
class EliminationOrder:
    """Vertex order such that each vertex's later neighbors form a clique."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class ChordalityResult:
    is_chordal: bool
    order: EliminationOrder | None
    hole: tuple[int, ...] | None  # chordless cycle of length >= 4


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties broken by smallest vertex id."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n):
        best = -1
        for v in range(g.n):
            if visited[v]:
                continue
            if best == -1 or labels[v] > labels[best]:
                best = v
        visited[best] = True
        order.append(best)
        for w in g.adj[best]:
            if not visited[w]:
                labels[w].append(g.n - step)
    return order


def _peo_violation(g: Graph, order: list[int]) -> tuple[int, int, int] | None:
    """First (v, u, w) with u, w later neighbors of v and u-w not an edge."""
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted(
            (w for w in g.adj[v] if position[w] > position[v]),
            key=lambda w: position[w],
        )
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if not g.has_edge(later[i], later[j]):
                    return (v, later[i], later[j])
    return None


def is_chordal(g: Graph) -> ChordalityResult:
    """LexBFS order verified for the perfect elimination property.

    The elimination order is the reverse of the LexBFS visit order. On
    failure a chordless cycle of length >= 4 is extracted as witness.
    """
    order = list(reversed(lex_bfs(g)))
    violation = _peo_violation(g, order)
    if violation is None:
        return ChordalityResult(True, EliminationOrder(tuple(order)), None)
    hole = _find_hole(g, *violation)
    if hole is None:
        hole = _find_hole_anywhere(g)
    assert hole is not None, "PEO failed but no chordless cycle found"
    return ChordalityResult(False, None, hole)


def _find_hole(g: Graph, v: int, u: int, w: int) -> tuple[int, ...] | None:
    """Chordless cycle through v from a shortest u-w path avoiding N[v]."""
    blocked = (set(g.adj[v]) | {v}) - {u, w}
    parent = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            path = [w]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()
            return (v, *path)
        for y in g.adj[x]:
            if y in blocked or y in parent:
                continue
            parent[y] = x
            queue.append(y)
    return None


def _find_hole_anywhere(g: Graph) -> tuple[int, ...] | None:
    """Scan all (v, u, w) paths for a hole; succeeds on any non-chordal graph."""
    for v in range(g.n):
        neigh = g.adj[v]
        for i in range(len(neigh)):
            for j in range(i + 1, len(neigh)):
                u, w = neigh[i], neigh[j]
                if g.has_edge(u, w):
                    continue
                hole = _find_hole(g, v, u, w)
                if hole is not None:
                    return hole
    return None


def _validate_peo(g: Graph, peo: EliminationOrder) -> None:
    if sorted(peo.order) != list(range(g.n)):
        raise InvalidPEOError("order is not a permutation of the vertices")
    if _peo_violation(g, list(peo.order)) is not None:
        raise InvalidPEOError("order violates the perfect elimination property")


def chordal_maximum_stable_set(g: Graph, peo: EliminationOrder) -> StableSet:
    """Greedy along the elimination order; maximum on chordal graphs."""
    _validate_peo(g, peo)
    taken: set[int] = set()
    for v in peo.order:
        if not any(w in taken for w in g.adj[v]):
            taken.add(v)
    return StableSet(members=frozenset(taken), is_maximum=True)


def chordal_alpha_minus(g: Graph) -> tuple[bool, dict]:
    """Alpha-minus-stability of a chordal graph.

    True iff the greedy stability system is 2-dominating; it is then the
    unique stability system and is returned as certificate. On False the
    certificate is an under-dominated vertex.
    """
    result = is_chordal(g)
    if not result.is_chordal:
        raise NotChordalError(f"graph has chordless cycle {result.hole}")
    system = chordal_maximum_stable_set(g, result.order)
    ok, witness = is_n_dominating(g, system.members, 2)
    if ok:
        return True, {"unique_system": sorted(system.members)}
    return False, {"under_dominated_vertex": witness, "system": sorted(system.members)}


def _require_tree(g: Graph) -> None:
    if g.n == 0 or not is_connected(g) or len(g.edges) != g.n - 1:
        raise NotATreeError("input is not a tree")


def tree_strong_unique_independence(g: Graph) -> bool:
    """Trees of order >= 3: all pendant-pair distances even.

    On a tree, pairwise distances are even exactly when all pendant vertices
    share one 2-coloring class, so a single BFS pass suffices.
    """
    _require_tree(g)
    if g.n < 3:
        raise OrderTooSmallError("tree must have order at least 3")
    b = bipartition(g)
    pendants = pendant_vertices(g)
    return pendants <= b.class_a or pendants <= b.class_b


def tree_alpha_plus(g: Graph) -> tuple[bool, Matching | None, bool]:
    """Alpha-plus-stability of a tree via the leaf-matching greedy.

    Repeatedly match a pendant vertex to its neighbor and delete both; the
    tree is alpha-plus-stable iff this empties it (a perfect matching).
    Returns (verdict, matching or None, is_path_2n flag).
    """
    _require_tree(g)
    if g.n < 2:
        raise NotATreeError("tree must have order at least 2")
    is_path_2n = g.n % 2 == 0 and max(g.degree(v) for v in range(g.n)) <= 2
    degree = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    chosen: set[tuple[int, int]] = set()
    leaves = deque(sorted(v for v in range(g.n) if degree[v] == 1))
    remaining = g.n
    while leaves:
        v = leaves.popleft()
        if not alive[v] or degree[v] != 1:
            continue
        partner = next(w for w in g.adj[v] if alive[w])
        chosen.add((v, partner) if v < partner else (partner, v))
        for x in (v, partner):
            alive[x] = False
            remaining -= 1
        for w in g.adj[partner]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    leaves.append(w)
        degree[v] = degree[partner] = 0
    if remaining == 0:
        return True, matching_from_edges(g.n, chosen), is_path_2n
    return False, None, is_path_2n


def bipartition_of_tree(g: Graph) -> Bipartition:
    _require_tree(g)
    return bipartition(g)
