"""Simple undirected graphs: representation, edge-list I/O and basic structure.

Vertices are dense integer ids 0..n-1. Edges are stored as unordered pairs
normalized to (min, max). All operations are pure; graphs are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction (bad vertex id, loop, inconsistent data)."""


class ParseError(ValueError):
    """Malformed edge-list document. Carries the 1-based offending line."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class NotBipartiteError(ValueError):
    """Raised when a bipartition is requested for a non-bipartite graph.

    ``odd_cycle`` is a simple odd cycle as a vertex sequence (no repeated
    start vertex at the end).
    """

    def __init__(self, odd_cycle: tuple[int, ...]):
        self.odd_cycle = odd_cycle
        super().__init__(f"graph is not bipartite; odd cycle {odd_cycle}")


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the sorted tuple of neighbors of v; every iteration over
    vertices, neighbors or edges is in ascending order so downstream
    algorithms are deterministic.
    """

    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def remove_edge(self, e: Edge) -> "Graph":
        e = normalize_edge(*e)
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return build_graph(self.n, self.edges - {e})

    def add_edge(self, e: Edge) -> "Graph":
        u, v = e
        e = normalize_edge(u, v)
        if e in self.edges:
            raise GraphError(f"edge {e} already present")
        return build_graph(self.n, self.edges | {e})

    def __repr__(self) -> str:  # keep pytest diffs readable
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Construct a Graph, validating ids and rejecting loops.

    Duplicate pairs in ``edges`` are collapsed silently; use parse_graph for
    counted collapsing of textual input.
    """
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    edge_set: set[Edge] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        edge_set.add(normalize_edge(u, v))
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_set:
        neighbors[u].add(v)
        neighbors[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in neighbors)
    return Graph(n=n, edges=frozenset(edge_set), adj=adj)


@dataclass(frozen=True)
class Bipartition:
    """Two color classes covering all vertices; every edge crosses them."""

    class_a: frozenset[int]
    class_b: frozenset[int]

    @property
    def balanced(self) -> bool:
        return len(self.class_a) == len(self.class_b)

    def side_of(self, v: int) -> int:
        """0 for class_a, 1 for class_b."""
        if v in self.class_a:
            return 0
        if v in self.class_b:
            return 1
        raise GraphError(f"vertex {v} not in bipartition")


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    duplicate_count: int
    metadata: dict[str, str] = field(default_factory=dict, compare=False)


def parse_graph(text: str) -> ParsedGraph:
    """Parse an edge-list document: header line "n m" then m lines "u v".

    Leading lines starting with '#' are metadata comments ("# key=value"
    populates the metadata dict) and are ignored by the graph itself.
    Duplicate edges are collapsed and counted rather than rejected.
    """
    metadata: dict[str, str] = {}
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    n = m = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if "=" in body:
                key, _, value = body.partition("=")
                metadata[key.strip()] = value.strip()
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", line_number)
        if header is None:
            if len(values) != 2:
                raise ParseError("header must be 'n m'", line_number)
            n, m = values
            if n < 0 or m < 0:
                raise ParseError("header counts must be nonnegative", line_number)
            header = (n, m)
            continue
        if len(values) != 2:
            raise ParseError("edge line must be 'u v'", line_number)
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range in edge {u} {v}", line_number)
        if u == v:
            raise ParseError(f"loop edge at vertex {u}", line_number)
        edges.append(normalize_edge(u, v))
    if header is None:
        raise ParseError("empty document, expected 'n m' header")
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges, found {len(edges)}")
    unique = set(edges)
    duplicates = len(edges) - len(unique)
    return ParsedGraph(graph=build_graph(n, unique), duplicate_count=duplicates, metadata=metadata)


def write_graph(g: Graph, metadata: dict[str, str] | None = None) -> str:
    """Emit the edge-list format accepted by parse_graph, edges sorted."""
    lines = []
    for key, value in (metadata or {}).items():
        lines.append(f"# {key}={value}")
    lines.append(f"{g.n} {len(g.edges)}")
    for u, v in g.edge_list():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def bipartition(g: Graph) -> Bipartition:
    """2-color the graph by BFS layering per component.

    Raises NotBipartiteError with a simple odd cycle on failure. For each
    component, the lexicographically smallest vertex lands in class_a, so
    output is deterministic even for disconnected input.
    """
    color: list[int] = [-1] * g.n
    parent: list[int] = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            next_queue: list[int] = []
            for u in queue:
                for v in g.adj[u]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        parent[v] = u
                        next_queue.append(v)
                    elif color[v] == color[u]:
                        raise NotBipartiteError(_odd_cycle(parent, u, v))
            queue = next_queue
    class_a = frozenset(v for v in range(g.n) if color[v] == 0)
    class_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(class_a=class_a, class_b=class_b)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    """Simple odd cycle from a same-color BFS conflict edge (u, v)."""
    path_u = _root_path(parent, u)
    path_v = _root_path(parent, v)
    # strip the common prefix up to the last shared ancestor
    k = 0
    while k < len(path_u) and k < len(path_v) and path_u[k] == path_v[k]:
        k += 1
    lca_index = k - 1
    cycle = path_u[lca_index:] + path_v[:lca_index:-1]
    return tuple(cycle)


def _root_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
        return True
    except NotBipartiteError:
        return False


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    components: list[frozenset[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        members = [root]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    members.append(v)
                    stack.append(v)
        components.append(frozenset(members))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, x: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph spanned by ``x`` plus the old->new id mapping.

    New ids follow the ascending order of the old ids, so certificates can
    be translated back deterministically.
    """
    members = sorted(set(x))
    for v in members:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
    mapping = {old: new for new, old in enumerate(members)}
    keep = set(members)
    edges = [
        (mapping[u], mapping[v])
        for (u, v) in g.edges
        if u in keep and v in keep
    ]
    return build_graph(len(members), edges), mapping


def is_n_dominating(g: Graph, d: Iterable[int], k: int) -> tuple[bool, int | None]:
    """Check |N(v) & D| >= k for every vertex v outside D.

    Returns (True, None) or (False, witness) with the smallest failing
    vertex.
    """
    if k < 1:
        raise GraphError("domination order must be positive")
    dset = set(d)
    for v in dset:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
    for v in range(g.n):
        if v in dset:
            continue
        if sum(1 for w in g.adj[v] if w in dset) < k:
            return False, v
    return True, None


def pendant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def all_pairs(n: int) -> Iterator[Edge]:
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)


def complement_edges(g: Graph) -> list[Edge]:
    """Edge set of the full complement, sorted."""
    return [e for e in all_pairs(g.n) if e not in g.edges]


def bipartite_complement_edges(g: Graph, b: Bipartition) -> list[Edge]:
    """Cross-class non-edges (edge set of the bipartite complement), sorted."""
    out = []
    for a in sorted(b.class_a):
        for c in sorted(b.class_b):
            e = normalize_edge(a, c)
            if e not in g.edges:
                out.append(e)
    return sorted(out)
