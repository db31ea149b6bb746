"""Exponential-time ground truth at desk scale.

Exact stability numbers by branch and bound, exhaustive enumeration of
maximum stable sets / maximum matchings, definition-level stability
predicates, and exhaustive small-graph enumeration (connected bipartite,
connected chordal, trees) with canonical-form deduplication.

Everything here is deliberately independent of the polynomial machinery in
the rest of the package; the two routes cross-validate each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from itertools import combinations_with_replacement, permutations
from typing import Callable

from .graph import (
    Edge,
    Graph,
    all_pairs,
    build_graph,
    connected_components,
)


class BudgetExceededError(RuntimeError):
    """Input exceeds the oracle budget; refusing instead of degrading."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices_exact_alpha: int = 24
    max_vertices_enumeration: int = 14
    max_graphs: int | None = None

    def __post_init__(self) -> None:
        if self.max_vertices_exact_alpha <= 0 or self.max_vertices_enumeration <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = OracleBudget()


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _greedy_clique_cover_bound(avail: int, masks: list[int]) -> int:
    """Size of a greedy clique cover of the available vertices.

    A stable set meets each clique at most once, so any cover bounds the
    stable-set size of the covered subgraph from above.
    """
    cliques: list[tuple[int, int]] = []  # (member mask, common neighborhood)
    count = 0
    m = avail
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        placed = False
        for i, (members, common) in enumerate(cliques):
            if (common >> v) & 1:
                cliques[i] = (members | (1 << v), common & masks[v])
                placed = True
                break
        if not placed:
            cliques.append((1 << v, masks[v]))
            count += 1
    return count


def oracle_alpha(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact stability number by branch and bound on the max-degree vertex."""
    if g.n > budget.max_vertices_exact_alpha:
        raise BudgetExceededError(
            f"n={g.n} exceeds exact-alpha budget {budget.max_vertices_exact_alpha}"
        )
    if g.n == 0:
        return 0
    masks = _adjacency_masks(g)
    best = 0

    def search(avail: int, size: int) -> None:
        nonlocal best
        if avail == 0:
            best = max(best, size)
            return
        if size + avail.bit_count() <= best:
            return
        if size + _greedy_clique_cover_bound(avail, masks) <= best:
            return
        pick = -1
        pick_deg = -1
        m = avail
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (masks[v] & avail).bit_count()
            if deg > pick_deg:
                pick, pick_deg = v, deg
        if pick_deg <= 1:
            # union of isolated vertices and disjoint edges: count greedily
            count = 0
            rest = avail
            while rest:
                v = (rest & -rest).bit_length() - 1
                count += 1
                rest &= ~(masks[v] | (1 << v))
            best = max(best, size + count)
            return
        search(avail & ~(masks[pick] | (1 << pick)), size + 1)
        search(avail & ~(1 << pick), size)

    search((1 << g.n) - 1, 0)
    return best


def oracle_mu(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact matching number by include/exclude on edges (any graph class)."""
    if g.n > budget.max_vertices_exact_alpha:
        raise BudgetExceededError(
            f"n={g.n} exceeds exact-alpha budget {budget.max_vertices_exact_alpha}"
        )
    edges = g.edge_list()
    best = 0

    def search(index: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        remaining = len(edges) - index
        free = g.n - used.bit_count()
        if size + min(remaining, free // 2) <= best:
            return
        for i in range(index, len(edges)):
            if size + min(len(edges) - i, free // 2) <= best:
                break
            u, v = edges[i]
            bit = (1 << u) | (1 << v)
            if used & bit:
                continue
            search(i + 1, used | bit, size + 1)

    search(0, 0, 0)
    return best


def enumerate_maximum_stable_sets(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> list[frozenset[int]]:
    """All stable sets of size alpha(G), sorted lexicographically."""
    if g.n > budget.max_vertices_enumeration:
        raise BudgetExceededError(
            f"n={g.n} exceeds enumeration budget {budget.max_vertices_enumeration}"
        )
    alpha = oracle_alpha(g, budget)
    masks = _adjacency_masks(g)
    results: list[tuple[int, ...]] = []

    def search(start: int, chosen: list[int], blocked: int) -> None:
        if len(chosen) == alpha:
            results.append(tuple(chosen))
            return
        for w in range(start, g.n):
            if len(chosen) + (g.n - w) < alpha:
                break
            if (blocked >> w) & 1:
                continue
            chosen.append(w)
            search(w + 1, chosen, blocked | masks[w])
            chosen.pop()

    search(0, [], 0)
    return [frozenset(t) for t in sorted(results)]


def enumerate_maximum_matchings(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> list[frozenset[Edge]]:
    """All matchings of size mu(G) via include/exclude on the edge list."""
    if len(g.edges) > 2 * budget.max_vertices_enumeration:
        raise BudgetExceededError(
            f"|E|={len(g.edges)} exceeds enumeration budget "
            f"{2 * budget.max_vertices_enumeration}"
        )
    edges = g.edge_list()
    mu = oracle_mu(g, OracleBudget(max_vertices_exact_alpha=max(g.n, 1)))
    results: list[frozenset[Edge]] = []

    def search(index: int, used: int, chosen: list[Edge]) -> None:
        if len(chosen) == mu:
            results.append(frozenset(chosen))
            return
        for i in range(index, len(edges)):
            if len(chosen) + (len(edges) - i) < mu:
                break
            u, v = edges[i]
            bit = (1 << u) | (1 << v)
            if used & bit:
                continue
            chosen.append(edges[i])
            search(i + 1, used | bit, chosen)
            chosen.pop()

    search(0, 0, [])
    return sorted(results, key=lambda m: sorted(m))


def def_alpha_minus(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Literal definition: alpha(G-e) = alpha(G) for every edge e."""
    base = oracle_alpha(g, budget)
    return all(
        oracle_alpha(g.remove_edge(e), budget) == base for e in g.edge_list()
    )


def def_alpha_plus(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Literal definition: alpha(G+e) = alpha(G) for every complement edge e."""
    base = oracle_alpha(g, budget)
    return all(
        oracle_alpha(g.add_edge(e), budget) == base
        for e in all_pairs(g.n)
        if e not in g.edges
    )


def def_alpha_stable(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return def_alpha_minus(g, budget) and def_alpha_plus(g, budget)


def oracle_stable_core(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[int]:
    """Vertices in every maximum stable set, by per-vertex alpha drop."""
    alpha = oracle_alpha(g, budget)
    core = []
    for v in range(g.n):
        sub = build_graph(
            g.n - 1,
            [(a - (a > v), b - (b > v)) for (a, b) in g.edges if v not in (a, b)],
        )
        if oracle_alpha(sub, budget) == alpha - 1:
            core.append(v)
    return frozenset(core)


# ---------------------------------------------------------------------------
# Exhaustive small-graph enumeration
# ---------------------------------------------------------------------------


def _bit_permute_table(width: int, perm: tuple[int, ...]) -> list[int]:
    """Table mapping a width-bit row to the row with columns permuted."""
    table = [0] * (1 << width)
    for value in range(1 << width):
        out = 0
        for new_pos, old_pos in enumerate(perm):
            if (value >> old_pos) & 1:
                out |= 1 << new_pos
        table[value] = out
    return table


@cache
def _col_perm_tables(width: int) -> tuple[list[int], ...]:
    return tuple(_bit_permute_table(width, p) for p in permutations(range(width)))


def _min_biadjacency(rows: tuple[int, ...], width: int) -> tuple[int, ...]:
    """Minimal sorted-row form over all column permutations."""
    best: tuple[int, ...] | None = None
    for table in _col_perm_tables(width):
        candidate = tuple(sorted(table[r] for r in rows))
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def _transpose_rows(rows: tuple[int, ...], width: int) -> tuple[int, ...]:
    """Transpose a len(rows) x width bit matrix."""
    cols = [0] * width
    for i, row in enumerate(rows):
        for j in range(width):
            if (row >> j) & 1:
                cols[j] |= 1 << i
    return tuple(cols)


def _bipartite_canonical_key(p: int, q: int, rows: tuple[int, ...]) -> tuple:
    """Canonical key of a connected bipartite graph given as a biadjacency.

    ``rows`` holds p masks of q bits. Connected bipartite graphs have a
    unique bipartition up to swapping sides, so minimizing over within-side
    permutations (plus the transpose when p == q) is a complete isomorphism
    invariant. The smaller side becomes the permuted columns to keep the
    factorial small.
    """
    if p == q:
        key = min(
            _min_biadjacency(rows, q),
            _min_biadjacency(_transpose_rows(rows, q), p),
        )
    elif p < q:
        key = _min_biadjacency(_transpose_rows(rows, q), p)
    else:  # pragma: no cover - callers keep p <= q
        key = _min_biadjacency(rows, q)
    return (min(p, q), max(p, q), key)


def _graph_from_biadjacency(p: int, q: int, rows: tuple[int, ...]) -> Graph:
    edges = []
    for i in range(p):
        for j in range(q):
            if (rows[i] >> j) & 1:
                edges.append((i, p + j))
    return build_graph(p + q, edges)


def _biadjacency_connected(p: int, q: int, rows: tuple[int, ...]) -> bool:
    seen_a = 1
    seen_b = 0
    frontier_a = 1
    while frontier_a:
        new_b = 0
        for i in range(p):
            if (frontier_a >> i) & 1:
                new_b |= rows[i]
        new_b &= ~seen_b
        seen_b |= new_b
        new_a = 0
        for i in range(p):
            if not (seen_a >> i) & 1 and rows[i] & new_b:
                new_a |= 1 << i
        seen_a |= new_a
        frontier_a = new_a
    return seen_a == (1 << p) - 1 and seen_b == (1 << q) - 1


@cache
def connected_bipartite_graphs(n: int) -> tuple[Graph, ...]:
    """Every connected bipartite graph on n unlabeled vertices, exactly once.

    Exhaustive for n <= 8 (enforced); deduplicated by the biadjacency
    canonical form.
    """
    if n > 8:
        raise BudgetExceededError("exhaustive enumeration limited to n <= 8")
    if n <= 0:
        return ()
    if n == 1:
        return (build_graph(1, []),)
    out: list[Graph] = []
    seen: set[tuple] = set()
    full = (1 << (n - 1)) - 1  # q-side cover target, recomputed per split
    for p in range(1, n // 2 + 1):
        q = n - p
        full = (1 << q) - 1
        for bits in range(1 << (p * q)):
            rows = tuple((bits >> (i * q)) & full for i in range(p))
            if any(r == 0 for r in rows):
                continue
            cover = 0
            for r in rows:
                cover |= r
            if cover != full:
                continue
            if not _biadjacency_connected(p, q, rows):
                continue
            key = _bipartite_canonical_key(p, q, rows)
            if key in seen:
                continue
            seen.add(key)
            out.append(_graph_from_biadjacency(p, q, rows))
    return tuple(out)


def enumerate_connected_bipartite(
    n: int, sink: Callable[[Graph], None] | None = None
) -> int:
    """Stream every connected bipartite graph on n unlabeled vertices.

    Returns the count; calls ``sink`` once per graph when given.
    """
    graphs = connected_bipartite_graphs(n)
    if sink is not None:
        for g in graphs:
            sink(g)
    return len(graphs)


def _disjoint_union(pieces: list[Graph]) -> Graph:
    n = sum(p.n for p in pieces)
    edges: list[Edge] = []
    offset = 0
    for piece in pieces:
        edges.extend((u + offset, v + offset) for (u, v) in piece.edges)
        offset += piece.n
    return build_graph(n, edges)


@cache
def bipartite_graphs(n: int) -> tuple[Graph, ...]:
    """All bipartite graphs on n unlabeled vertices, disconnected included.

    Unlabeled disjoint unions correspond exactly to multisets of connected
    unlabeled pieces, so composition needs no further isomorphism tests.
    """
    pools = {k: connected_bipartite_graphs(k) for k in range(1, n + 1)}
    out: list[Graph] = []

    def compose(remaining: int, min_size: int, chosen: list[Graph]) -> None:
        if remaining == 0:
            out.append(_disjoint_union(chosen))
            return
        for size in range(min_size, remaining + 1):
            pool = pools[size]
            for count in range(1, remaining // size + 1):
                rest = remaining - size * count
                if rest != 0 and rest <= size:
                    continue
                for combo in combinations_with_replacement(pool, count):
                    compose(rest, size + 1, chosen + list(combo))

    compose(n, 1, [])
    return tuple(out)


# --- general-graph canonical form (chordal / tree / small-n dedup) ---------


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical adjacency encoding minimized over vertex orderings.

    Exact lexicographic minimum: vertices are placed one at a time and only
    placements achieving the minimal adjacency row (bits toward already
    placed vertices) are explored, which preserves the global minimum.
    """
    n = g.n
    if n == 0:
        return (0, ())
    masks = _adjacency_masks(g)
    identity = tuple(
        sum(((masks[v] >> u) & 1) << idx for idx, u in enumerate(range(v)))
        for v in range(n)
    )
    best: list[tuple[int, ...]] = [identity]

    def rec(placed: list[int], placed_mask: int, prefix: list[int]) -> None:
        if len(placed) == n:
            candidate = tuple(prefix)
            if candidate < best[0]:
                best[0] = candidate
            return
        rows: dict[int, list[int]] = {}
        for v in range(n):
            if (placed_mask >> v) & 1:
                continue
            row = 0
            for idx, u in enumerate(placed):
                if (masks[v] >> u) & 1:
                    row |= 1 << idx
            rows.setdefault(row, []).append(v)
        min_row = min(rows)
        prefix.append(min_row)
        if tuple(prefix) > best[0][: len(prefix)]:
            prefix.pop()
            return
        for v in rows[min_row]:
            placed.append(v)
            rec(placed, placed_mask | (1 << v), prefix)
            placed.pop()
        prefix.pop()

    rec([], 0, [])
    return (n, best[0])


@cache
def connected_chordal_graphs(n: int) -> tuple[Graph, ...]:
    """Every connected chordal graph on n unlabeled vertices.

    Grown by simplicial-vertex extension: every connected chordal graph on n
    vertices arises from one on n-1 by attaching a new vertex to a nonempty
    clique (removing a simplicial vertex keeps a connected chordal graph
    connected and chordal).
    """
    if n > 8:
        raise BudgetExceededError("exhaustive enumeration limited to n <= 8")
    if n <= 0:
        return ()
    if n == 1:
        return (build_graph(1, []),)
    out: list[Graph] = []
    seen: set[tuple] = set()
    for base in connected_chordal_graphs(n - 1):
        for clique in _all_nonempty_cliques(base):
            g = build_graph(n, list(base.edges) + [(v, n - 1) for v in clique])
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return tuple(out)


def _all_nonempty_cliques(g: Graph) -> list[tuple[int, ...]]:
    masks = _adjacency_masks(g)
    cliques: list[tuple[int, ...]] = []

    def extend(members: list[int], allowed: int) -> None:
        if members:
            cliques.append(tuple(members))
        m = allowed
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            members.append(v)
            extend(members, allowed & masks[v] & ~((1 << (v + 1)) - 1))
            members.pop()

    extend([], (1 << g.n) - 1)
    return cliques


@cache
def trees(n: int) -> tuple[Graph, ...]:
    """Every tree on n unlabeled vertices, by leaf extension."""
    if n > 10:
        raise BudgetExceededError("tree enumeration limited to n <= 10")
    if n <= 0:
        return ()
    if n == 1:
        return (build_graph(1, []),)
    out: list[Graph] = []
    seen: set[tuple] = set()
    for base in trees(n - 1):
        for v in range(base.n):
            g = build_graph(n, list(base.edges) + [(v, n - 1)])
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return tuple(out)


@cache
def small_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs (any class, disconnected included) on n <= 6 vertices."""
    if n > 6:
        raise BudgetExceededError("general-graph enumeration limited to n <= 6")
    if n <= 0:
        return ()
    pairs = list(all_pairs(n))
    out: list[Graph] = []
    seen: set[tuple] = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        g = build_graph(n, edges)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return tuple(out)


# ---------------------------------------------------------------------------
# Seeded random samplers (reproducible; used for 9 <= n <= 14 sweeps)
# ---------------------------------------------------------------------------


def sample_connected_bipartite(n: int, count: int, seed: int) -> list[Graph]:
    """Seeded connected bipartite samples.

    Bipartition sizes drawn uniformly, each cross edge present with
    probability 1/2, conditioned on connectivity by rejection (sizes are
    redrawn on every attempt).
    """
    if n < 2:
        raise ValueError("sampler needs n >= 2")
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        p = rng.randint(1, n - 1)
        q = n - p
        edges = [(i, p + j) for i in range(p) for j in range(q) if rng.random() < 0.5]
        g = build_graph(n, edges)
        if len(connected_components(g)) == 1:
            out.append(g)
    return out


def sample_graphs(n: int, count: int, seed: int) -> list[Graph]:
    """Seeded general-graph samples, edge probability 1/2."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = [e for e in all_pairs(n) if rng.random() < 0.5]
        out.append(build_graph(n, edges))
    return out
