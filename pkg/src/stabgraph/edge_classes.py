"""Per-edge status with respect to maximum matchings.

Every edge is MANDATORY (in every maximum matching), OPTIONAL (in some but
not all) or FORBIDDEN (in none). With a perfect reference matching the
classification is read off the strongly connected components of the
matching digraph (matched pairs contracted, non-matching edges oriented
A-side to B-side); otherwise each edge is settled by recomputing matching
numbers. Alternating-cycle certificates come from directed cycles in the
digraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graph import Bipartition, Edge, Graph, normalize_edge
from .matching import Matching, _hopcroft_karp, maximum_matching


class EdgeStatus(Enum):
    MANDATORY = "mandatory"
    OPTIONAL = "optional"
    FORBIDDEN = "forbidden"


class NoPerfectMatchingError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeClassification:
    status: dict[Edge, EdgeStatus]
    reference_matching: Matching

    @property
    def mandatory(self) -> frozenset[Edge]:
        return frozenset(e for e, s in self.status.items() if s is EdgeStatus.MANDATORY)

    @property
    def optional(self) -> frozenset[Edge]:
        return frozenset(e for e, s in self.status.items() if s is EdgeStatus.OPTIONAL)

    @property
    def forbidden(self) -> frozenset[Edge]:
        return frozenset(e for e, s in self.status.items() if s is EdgeStatus.FORBIDDEN)


@dataclass(frozen=True)
class MatchingDigraph:
    """Matched pairs contracted to nodes; one arc per non-matching edge,
    oriented from the node of its class-A endpoint to the node of its
    class-B endpoint."""

    node_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    arcs: tuple[tuple[int, int, int, int], ...]  # (from, to, a_vertex, b_vertex)
    scc_id: tuple[int, ...]

    def scc_size(self, node: int) -> int:
        target = self.scc_id[node]
        return sum(1 for s in self.scc_id if s == target)


@dataclass(frozen=True)
class CycleFamily:
    """Vertex-disjoint alternating cycles plus the edges two matchings share."""

    cycles: list[tuple[int, ...]]
    shared_edges: frozenset[Edge]


def build_matching_digraph(g: Graph, b: Bipartition, m: Matching) -> MatchingDigraph:
    node_of = [-1] * g.n
    members: list[tuple[int, ...]] = []
    for v in range(g.n):
        if node_of[v] != -1:
            continue
        w = m.partner[v]
        node_id = len(members)
        if w == -1:
            members.append((v,))
            node_of[v] = node_id
        else:
            members.append((v, w) if v < w else (w, v))
            node_of[v] = node_id
            node_of[w] = node_id
    arcs = []
    for u, v in g.edge_list():
        if m.partner[u] == v:
            continue
        a, bb = (u, v) if u in b.class_a else (v, u)
        arcs.append((node_of[a], node_of[bb], a, bb))
    scc = _tarjan_scc(len(members), arcs)
    return MatchingDigraph(
        node_of=tuple(node_of),
        members=tuple(members),
        arcs=tuple(sorted(arcs)),
        scc_id=tuple(scc),
    )


def _tarjan_scc(n_nodes: int, arcs: list[tuple[int, int, int, int]]) -> list[int]:
    """Iterative Tarjan; component ids renumbered by smallest member node."""
    out: list[list[int]] = [[] for _ in range(n_nodes)]
    for frm, to, _, _ in sorted(arcs):
        out[frm].append(to)
    index = [-1] * n_nodes
    lowlink = [0] * n_nodes
    on_stack = [False] * n_nodes
    stack: list[int] = []
    comp = [-1] * n_nodes
    counter = 0
    comp_count = 0
    for root in range(n_nodes):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(out[v])):
                w = out[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            if lowlink[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    # renumber components by their smallest node for deterministic output
    first_node: dict[int, int] = {}
    for v in range(n_nodes):
        first_node.setdefault(comp[v], v)
    order = sorted(first_node, key=lambda c: first_node[c])
    remap = {old: new for new, old in enumerate(order)}
    return [remap[c] for c in comp]


def classify_edges(g: Graph, b: Bipartition, method: str = "auto") -> EdgeClassification:
    """Classify every edge as MANDATORY / OPTIONAL / FORBIDDEN.

    method="auto" uses the SCC fast path when the maximum matching is
    perfect and falls back to per-edge recomputation otherwise; "scc" and
    "recompute" force one route (used by the differential tests).
    """
    m = maximum_matching(g, b)
    if method not in ("auto", "scc", "recompute"):
        raise ValueError(f"unknown method {method!r}")
    if method == "scc" and not m.is_perfect(g.n):
        raise NoPerfectMatchingError("SCC classification needs a perfect matching")
    if method == "recompute" or (method == "auto" and not m.is_perfect(g.n)):
        return _classify_recompute(g, b, m)
    return _classify_scc(g, b, m)


def _classify_scc(g: Graph, b: Bipartition, m: Matching) -> EdgeClassification:
    dg = build_matching_digraph(g, b, m)
    status: dict[Edge, EdgeStatus] = {}
    nontrivial = {c for c in dg.scc_id if sum(1 for x in dg.scc_id if x == c) > 1}
    for frm, to, a, bb in dg.arcs:
        e = normalize_edge(a, bb)
        same = dg.scc_id[frm] == dg.scc_id[to]
        status[e] = EdgeStatus.OPTIONAL if same else EdgeStatus.FORBIDDEN
    for e in m.edges:
        node = dg.node_of[e[0]]
        if dg.scc_id[node] in nontrivial:
            status[e] = EdgeStatus.OPTIONAL
        else:
            status[e] = EdgeStatus.MANDATORY
    return EdgeClassification(status=status, reference_matching=m)


def _classify_recompute(g: Graph, b: Bipartition, m: Matching) -> EdgeClassification:
    """Settle each edge from scratch: e is MANDATORY iff mu(G-e) = mu-1 and
    FORBIDDEN iff mu(G-u-v) < mu-1 (forcing e equals deleting its ends)."""
    left = sorted(b.class_a)
    mu = m.size
    status: dict[Edge, EdgeStatus] = {}
    for e in g.edge_list():
        u, v = e
        if e in m.edges:
            g2 = g.remove_edge(e)
            mu_minus = sum(1 for x in _hopcroft_karp(g2, left) if x != -1) // 2
            status[e] = EdgeStatus.MANDATORY if mu_minus == mu - 1 else EdgeStatus.OPTIONAL
        else:
            mu_forced = _mu_without_vertices(g, left, (u, v))
            status[e] = EdgeStatus.OPTIONAL if mu_forced == mu - 1 else EdgeStatus.FORBIDDEN
    return EdgeClassification(status=status, reference_matching=m)


def _mu_without_vertices(g: Graph, left: list[int], banned: tuple[int, ...]) -> int:
    from .graph import build_graph

    banned_set = set(banned)
    edges = [e for e in g.edges if not (set(e) & banned_set)]
    g2 = build_graph(g.n, edges)
    keep_left = [u for u in left if u not in banned_set]
    return sum(1 for x in _hopcroft_karp(g2, keep_left) if x != -1) // 2


def allowed_degree(g: Graph, cls: EdgeClassification) -> dict[int, int]:
    """Per-vertex count of incident non-FORBIDDEN edges.

    Only defined for graphs with a perfect matching.
    """
    if not cls.reference_matching.is_perfect(g.n):
        raise NoPerfectMatchingError("allowed_degree needs a perfect matching")
    counts = {v: 0 for v in range(g.n)}
    for (u, v), s in cls.status.items():
        if s is not EdgeStatus.FORBIDDEN:
            counts[u] += 1
            counts[v] += 1
    return counts


def alternating_cycle_through(
    g: Graph, b: Bipartition, cls: EdgeClassification, v: int
) -> tuple[int, ...] | None:
    """Simple cycle through v alternating w.r.t. the reference matching.

    Realized as a directed cycle through v's node inside its strongly
    connected component of the matching digraph; None iff that component is
    trivial.
    """
    m = cls.reference_matching
    if not m.is_perfect(g.n):
        raise NoPerfectMatchingError("alternating cycles need a perfect matching")
    dg = build_matching_digraph(g, b, m)
    start = dg.node_of[v]
    target_scc = dg.scc_id[start]
    if dg.scc_size(start) == 1:
        return None
    out: dict[int, list[tuple[int, int, int]]] = {}
    for frm, to, a, bb in dg.arcs:
        if dg.scc_id[frm] == target_scc and dg.scc_id[to] == target_scc:
            out.setdefault(frm, []).append((to, a, bb))
    # depth-first search in ascending order for a directed cycle back to start
    path_arcs: list[tuple[int, int, int, int]] = []
    visited = {start}

    def dfs(node: int) -> bool:
        for to, a, bb in out.get(node, []):
            if to == start:
                path_arcs.append((node, to, a, bb))
                return True
            if to in visited:
                continue
            visited.add(to)
            path_arcs.append((node, to, a, bb))
            if dfs(to):
                return True
            path_arcs.pop()
        return False

    if not dfs(start):  # pragma: no cover - nontrivial SCC always has a cycle
        return None
    cycle: list[int] = []
    for i, (_, to, a, bb) in enumerate(path_arcs):
        cycle.append(a)
        nxt = path_arcs[(i + 1) % len(path_arcs)]
        # inside node `to` the walk enters at bb and leaves at the matched
        # partner, which is the a-vertex of the next arc
        cycle.append(bb)
    # rotate so the requested vertex comes first
    pos = cycle.index(v) if v in cycle else 0
    rotated = tuple(cycle[pos:] + cycle[:pos])
    return rotated


def symmetric_difference_cycles(g: Graph, m1: Matching, m2: Matching) -> CycleFamily:
    """Partition induced by two perfect matchings: alternating cycles from
    m1 ^ m2 plus the shared edges m1 & m2."""
    for m in (m1, m2):
        if not m.is_perfect(g.n):
            raise NoPerfectMatchingError("both matchings must be perfect")
    shared = m1.edges & m2.edges
    diff = m1.edges ^ m2.edges
    seen: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for start in range(g.n):
        if start in seen:
            continue
        if m1.partner[start] == m2.partner[start]:
            seen.add(start)
            seen.add(m1.partner[start])
            continue
        cycle = [start]
        seen.add(start)
        v = start
        use_m1 = True
        while True:
            v = m1.partner[v] if use_m1 else m2.partner[v]
            use_m1 = not use_m1
            if v == start:
                break
            cycle.append(v)
            seen.add(v)
        cycles.append(tuple(cycle))
    del diff
    return CycleFamily(cycles=cycles, shared_edges=frozenset(shared))
