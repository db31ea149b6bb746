"""Constructions with certified stability properties.

Classic families (cycles, paths, complete bipartite, random trees) plus the
structure-preserving compositions: ear growth (always bistable), even-path
attachment, bistable substitution, and bridged unions of alpha-stable or
alpha-plus-stable pieces. Randomized generators take explicit seeds and all
verdict-carrying outputs are re-checked rather than trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import (
    Bipartition,
    Edge,
    Graph,
    NotBipartiteError,
    bipartition,
    build_graph,
    is_connected,
    normalize_edge,
)
from .stability import (
    Ear,
    EarDecomposition,
    Verdict,
    is_alpha_minus,
    is_alpha_plus,
    is_bistable,
)


class GeneratorError(ValueError):
    pass


def even_cycle(k: int) -> Graph:
    """Chordless cycle on k vertices, k even and >= 4, numbered in order."""
    if k < 4 or k % 2 != 0:
        raise GeneratorError("cycle length must be even and at least 4")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """Chordless path on k >= 1 vertices, numbered in order."""
    if k < 1:
        raise GeneratorError("path needs at least one vertex")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with class A = 0..p-1."""
    if p < 1 or q < 1:
        raise GeneratorError("both sides need at least one vertex")
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def random_tree(k: int, seed: int) -> Graph:
    """Uniform-ish random tree by attaching each vertex to a random earlier one."""
    if k < 1:
        raise GeneratorError("tree needs at least one vertex")
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, k)]
    return build_graph(k, edges)


@dataclass(frozen=True)
class GeneratedBistable:
    graph: Graph
    decomposition: EarDecomposition
    seed: int


def ear_growth(target_vertices: int, seed: int) -> GeneratedBistable:
    """Grow a bistable graph from a single edge by random ear attachment.

    Each ear joins a random class-A vertex to a random class-B vertex
    through a fresh even path; the internal vertex count is geometric with
    mean 2, capped by the remaining budget. Bistable by construction; the
    generating ear decomposition is returned as certificate.
    """
    if target_vertices < 2 or target_vertices % 2 != 0:
        raise GeneratorError("target vertex count must be even and at least 2")
    rng = random.Random(seed)
    class_a = [0]
    class_b = [1]
    edges: set[Edge] = {(0, 1)}
    ears: list[Ear] = []
    next_vertex = 2
    while next_vertex < target_vertices:
        remaining = target_vertices - next_vertex
        pairs = _geometric_pairs(rng, cap=remaining // 2)
        a = rng.choice(class_a)
        b = rng.choice(class_b)
        if pairs == 0:
            chord = normalize_edge(a, b)
            if chord in edges:
                continue  # redraw; zero-vertex ear needs a fresh edge
            edges.add(chord)
            ears.append(Ear(start=a, interior=(), end=b))
            continue
        interior: list[int] = []
        for _ in range(pairs):
            interior.extend((next_vertex, next_vertex + 1))
            next_vertex += 2
        walk = [a, *interior, b]
        for i in range(len(walk) - 1):
            edges.add(normalize_edge(walk[i], walk[i + 1]))
        # interior alternates B, A, B, A, ... starting opposite the attach side
        class_b.extend(interior[0::2])
        class_a.extend(interior[1::2])
        ears.append(Ear(start=a, interior=tuple(interior), end=b))
    graph = build_graph(target_vertices, edges)
    return GeneratedBistable(
        graph=graph,
        decomposition=EarDecomposition(base_edge=(0, 1), ears=tuple(ears)),
        seed=seed,
    )


def _geometric_pairs(rng: random.Random, cap: int) -> int:
    """Geometric draw (P(t) = 2^-(t+1), mean 1 pair = 2 vertices), capped."""
    t = 0
    while rng.random() < 0.5:
        t += 1
    return min(t, cap)


def attach_even_path(
    h: Graph, k: int, attachments: Sequence[tuple[int, int]]
) -> tuple[Graph, bool]:
    """Attach a fresh path on k vertices to a bistable graph.

    ``attachments`` lists (path_position, h_vertex) edges; both path
    endpoints (positions 0 and k-1) must be attached and the result must be
    bipartite. Returns the new graph with its re-checked bistable verdict.
    """
    if k < 2 or k % 2 != 0:
        raise GeneratorError("path length must be even and at least 2")
    if not is_bistable(h).holds:
        raise GeneratorError("host graph is not bistable")
    positions = {p for p, _ in attachments}
    if 0 not in positions or k - 1 not in positions:
        raise GeneratorError("both pendant path vertices must be attached")
    g = _build_attachment_graph(h, k, attachments)
    try:
        bipartition(g)
    except NotBipartiteError as exc:
        raise GeneratorError(f"attachments break bipartiteness: {exc}") from exc
    return g, is_bistable(g).holds


def _build_attachment_graph(
    h: Graph, k: int, attachments: Sequence[tuple[int, int]]
) -> Graph:
    """Unchecked union of h, a fresh k-path and the attachment edges.

    Exposed for tests that deliberately violate the attachment
    preconditions.
    """
    edges = set(h.edges)
    for i in range(k - 1):
        edges.add((h.n + i, h.n + i + 1))
    for pos, v in attachments:
        if not (0 <= pos < k) or not (0 <= v < h.n):
            raise GeneratorError(f"attachment ({pos}, {v}) out of range")
        edges.add(normalize_edge(h.n + pos, v))
    return build_graph(h.n + k, edges)


PortChoice = Callable[[int, str, Graph, Bipartition], int]


def _default_port(piece_index: int, side: str, piece: Graph, b: Bipartition) -> int:
    chosen = b.class_a if side == "a" else b.class_b
    return min(chosen)


def substitute(
    template: Graph,
    pieces: Sequence[Graph],
    port_choice: PortChoice | None = None,
) -> Graph:
    """Blow up each template vertex pair (x_i, y_i) into a bistable piece.

    The template must be bistable on 2p vertices, p >= 2; each template edge
    x_i y_j with i != j becomes one edge from a chosen class-A vertex of
    piece i to a chosen class-B vertex of piece j. The result is bistable
    whenever the inputs are.
    """
    port = port_choice or _default_port
    if not is_bistable(template).holds:
        raise GeneratorError("template is not bistable")
    tb = bipartition(template)
    p = len(tb.class_a)
    if p < 2:
        raise GeneratorError("template must have at least two vertices per class")
    if len(pieces) != p:
        raise GeneratorError(f"need exactly {p} pieces, got {len(pieces)}")
    for i, piece in enumerate(pieces):
        if not is_bistable(piece).holds:
            raise GeneratorError(f"piece {i} is not bistable")
    xs = sorted(tb.class_a)
    ys = sorted(tb.class_b)
    index_of = {v: i for i, v in enumerate(xs)}
    index_of.update({v: i for i, v in enumerate(ys)})
    offsets = []
    total = 0
    for piece in pieces:
        offsets.append(total)
        total += piece.n
    edges: list[Edge] = []
    part_infos = [bipartition(piece) for piece in pieces]
    for k, piece in enumerate(pieces):
        edges.extend((u + offsets[k], v + offsets[k]) for (u, v) in piece.edges)
    for u, v in sorted(template.edges):
        x, y = (u, v) if u in tb.class_a else (v, u)
        i, j = index_of[x], index_of[y]
        if i == j:
            continue
        a_local = port(i, "a", pieces[i], part_infos[i])
        b_local = port(j, "b", pieces[j], part_infos[j])
        edges.append(normalize_edge(a_local + offsets[i], b_local + offsets[j]))
    return build_graph(total, edges)


@dataclass(frozen=True)
class UnionResult:
    graph: Graph
    alpha_plus: Verdict
    alpha_stable: bool


def union_connect(pieces: Sequence[Graph], bridges: Sequence[Edge]) -> UnionResult:
    """Disjoint union of bipartite pieces plus bridge edges.

    Bridges are given in global ids (piece i occupies a contiguous block
    after the pieces before it). The union must come out bipartite and
    connected; stability verdicts of the result are re-checked and returned.
    """
    if not pieces:
        raise GeneratorError("need at least one piece")
    edges: list[Edge] = []
    total = 0
    for piece in pieces:
        edges.extend((u + total, v + total) for (u, v) in piece.edges)
        total += piece.n
    for u, v in bridges:
        if not (0 <= u < total and 0 <= v < total) or u == v:
            raise GeneratorError(f"bad bridge ({u}, {v})")
        edges.append(normalize_edge(u, v))
    g = build_graph(total, edges)
    try:
        bipartition(g)
    except NotBipartiteError as exc:
        raise GeneratorError("bridges do not respect a global bipartition") from exc
    if not is_connected(g):
        raise GeneratorError("bridges do not connect the union")
    plus = is_alpha_plus(g)
    minus = is_alpha_minus(g)
    return UnionResult(graph=g, alpha_plus=plus, alpha_stable=plus.holds and minus.holds)


def piece_offsets(pieces: Sequence[Graph]) -> list[int]:
    out = []
    total = 0
    for piece in pieces:
        out.append(total)
        total += piece.n
    return out


def default_bridges(pieces: Sequence[Graph]) -> list[Edge]:
    """Deterministic class-respecting bridges joining consecutive pieces.

    Connects the smallest class-A vertex of piece i to the smallest class-B
    vertex of piece i+1 (classes as each piece's own bipartition), which
    keeps the union 2-colorable.
    """
    offsets = piece_offsets(pieces)
    bridges = []
    for i in range(len(pieces) - 1):
        b_i = bipartition(pieces[i])
        b_j = bipartition(pieces[i + 1])
        u = min(b_i.class_a) + offsets[i]
        v = min(b_j.class_b) + offsets[i + 1]
        bridges.append(normalize_edge(u, v))
    return bridges
