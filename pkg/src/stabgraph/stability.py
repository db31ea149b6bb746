"""Stability verdicts and structural decompositions.

Decides alpha-minus / alpha-plus / alpha-stability and bistability, with
machine-checkable certificates, and produces the two structural
decompositions: the bistable (elementary-piece) decomposition of an
alpha-plus-stable bipartite graph and the ear decomposition of a bistable
graph.

Routing: bipartite graphs use the matching characterizations, chordal
graphs the unique-system test, anything else falls back to the
definition-level oracle while small enough.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any

from . import chordal as chordal_mod
from . import oracle as oracle_mod
from .edge_classes import (
    EdgeClassification,
    EdgeStatus,
    alternating_cycle_through,
    build_matching_digraph,
    classify_edges,
)
from .graph import (
    Bipartition,
    Edge,
    Graph,
    NotBipartiteError,
    all_pairs,
    bipartition,
    build_graph,
    connected_components,
    induced_subgraph,
    is_connected,
    normalize_edge,
)
from .matching import (
    StableSet,
    matching_core,
    maximum_matching,
    maximum_stable_set,
    stable_core,
)

ORACLE_ROUTE_LIMIT = 16


class UnsupportedClassError(ValueError):
    """Graph is neither bipartite nor chordal and too large for the oracle."""


class NotAlphaPlusError(ValueError):
    pass


class NotBistableError(ValueError):
    pass


class NotConnectedError(ValueError):
    pass


class NotUniqueError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    holds: bool
    certificate: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class BistableResult:
    holds: bool
    certificate: dict[str, Any]
    is_k2: bool = False

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Ear:
    """Even path attached to the graph built so far.

    ``start`` and ``end`` are existing vertices in different color classes;
    ``interior`` lists the fresh vertices along the path (even count,
    possibly zero).
    """

    start: int
    interior: tuple[int, ...]
    end: int

    def edges(self) -> list[Edge]:
        walk = (self.start, *self.interior, self.end)
        return [normalize_edge(walk[i], walk[i + 1]) for i in range(len(walk) - 1)]


@dataclass(frozen=True)
class EarDecomposition:
    base_edge: Edge
    ears: tuple[Ear, ...]


@dataclass(frozen=True)
class BistableDecomposition:
    pieces: tuple[frozenset[int], ...]
    k2_pieces: tuple[Edge, ...]


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    graph_class: str
    alpha: int | None
    mu: int | None
    alpha_minus: Verdict
    alpha_plus: Verdict
    alpha_stable: bool
    bistable: bool


@dataclass(frozen=True)
class StabilityReport:
    graph_class: str
    alpha_value: int | None
    mu_value: int | None
    alpha_minus: Verdict
    alpha_plus: Verdict
    alpha_stable: bool
    alpha_stable_certificate: dict[str, Any]
    bistable: BistableResult
    per_component: tuple[ComponentReport, ...]


def _component_graphs(g: Graph) -> list[tuple[Graph, dict[int, int], list[int]]]:
    """(subgraph, old->new map, new->old list) per component, by smallest member."""
    out = []
    for comp in connected_components(g):
        sub, mapping = induced_subgraph(g, comp)
        back = [0] * sub.n
        for old, new in mapping.items():
            back[new] = old
        out.append((sub, mapping, back))
    return out


def _classify_graph(g: Graph) -> str:
    try:
        bipartition(g)
        return "bipartite"
    except NotBipartiteError:
        pass
    if chordal_mod.is_chordal(g).is_chordal:
        return "chordal"
    return "other"


def _oracle_guard(g: Graph, predicate: str) -> None:
    if g.n > ORACLE_ROUTE_LIMIT:
        raise UnsupportedClassError(
            f"{predicate}: component with {g.n} vertices is neither bipartite "
            f"nor chordal and exceeds the oracle limit {ORACLE_ROUTE_LIMIT}"
        )


# ---------------------------------------------------------------------------
# alpha-minus
# ---------------------------------------------------------------------------


def is_alpha_minus(g: Graph) -> Verdict:
    """Alpha unchanged by deletion of any single edge.

    A disconnected graph qualifies iff each component does. Bipartite
    components: empty matching core; chordal components: the greedy system
    is 2-dominating (then unique); other components go to the oracle.
    """
    for sub, _, back in _component_graphs(g):
        verdict = _component_alpha_minus(sub)
        if not verdict.holds:
            return Verdict(False, _translate_certificate(verdict.certificate, back))
    return Verdict(True)


def _component_alpha_minus(sub: Graph) -> Verdict:
    try:
        b = bipartition(sub)
    except NotBipartiteError:
        b = None
    if b is not None:
        core = matching_core(sub, b)
        if core:
            e = min(core)
            return Verdict(False, {"mandatory_edge": e})
        return Verdict(True)
    chord = chordal_mod.is_chordal(sub)
    if chord.is_chordal:
        holds, cert = chordal_mod.chordal_alpha_minus(sub)
        return Verdict(holds, cert)
    _oracle_guard(sub, "alpha-minus")
    if oracle_mod.def_alpha_minus(sub):
        return Verdict(True)
    base = oracle_mod.oracle_alpha(sub)
    for e in sub.edge_list():
        if oracle_mod.oracle_alpha(sub.remove_edge(e)) != base:
            return Verdict(False, {"alpha_dropping_edge": e})
    raise AssertionError("unreachable")  # pragma: no cover


def _translate_certificate(cert: dict[str, Any], back: list[int]) -> dict[str, Any]:
    """Map component-local vertex ids in a certificate back to original ids."""

    def conv(value: Any) -> Any:
        if isinstance(value, int):
            return back[value]
        if isinstance(value, (tuple, list)):
            return type(value)(conv(x) for x in value)
        if isinstance(value, (set, frozenset)):
            return sorted(conv(x) for x in value)
        return value

    return {k: conv(v) for k, v in cert.items()}


# ---------------------------------------------------------------------------
# alpha-plus
# ---------------------------------------------------------------------------


def is_alpha_plus(g: Graph) -> Verdict:
    """Alpha unchanged by addition of any single non-edge.

    All components must be alpha-plus-stable and at most one may have a
    stable core of size exactly one (for bipartite components that means at
    most one isolated vertex).
    """
    matchings: list[list[Edge]] = []
    core_one: list[int] = []
    for idx, (sub, _, back) in enumerate(_component_graphs(g)):
        verdict, matching_edges, core_size = _component_alpha_plus(sub)
        if not verdict.holds:
            return Verdict(
                False,
                {"component": idx, **_translate_certificate(verdict.certificate, back)},
            )
        if core_size == 1:
            core_one.append(idx)
        matchings.append(sorted(
            normalize_edge(back[u], back[v]) for (u, v) in matching_edges
        ))
    if len(core_one) > 1:
        comps = _component_graphs(g)
        witness = [min(comps[i][2]) for i in core_one[:2]]
        return Verdict(
            False,
            {
                "components_with_core_one": core_one,
                "alpha_dropping_pair": tuple(witness),
            },
        )
    return Verdict(True, {"perfect_matchings": matchings})


def _component_alpha_plus(sub: Graph) -> tuple[Verdict, list[Edge], int]:
    """(verdict, perfect matching edges, stable-core size) for one component."""
    if sub.n == 1:
        return Verdict(True), [], 1
    try:
        b = bipartition(sub)
    except NotBipartiteError:
        b = None
    if b is not None:
        m = maximum_matching(sub, b)
        if m.is_perfect(sub.n):
            return Verdict(True), sorted(m.edges), 0
        core = sorted(stable_core(sub, b))
        pair = tuple(core[:2])
        return (
            Verdict(False, {"unmatched_pair": pair}),
            [],
            len(core),
        )
    _oracle_guard(sub, "alpha-plus")
    core = sorted(oracle_mod.oracle_stable_core(sub))
    if oracle_mod.def_alpha_plus(sub):
        return Verdict(True), [], len(core)
    base = oracle_mod.oracle_alpha(sub)
    for e in all_pairs(sub.n):
        if e in sub.edges:
            continue
        if oracle_mod.oracle_alpha(sub.add_edge(e)) != base:
            return Verdict(False, {"alpha_dropping_pair": e}), [], len(core)
    raise AssertionError("unreachable")  # pragma: no cover


# ---------------------------------------------------------------------------
# bistability (elementary graphs)
# ---------------------------------------------------------------------------


def is_bistable(g: Graph) -> BistableResult:
    """Exactly two stability systems, namely the color classes.

    For n >= 4 this is Hetyei's elementary property: connected, perfectly
    matchable, every edge in some perfect matching. K2 is bistable by
    definition and flagged via ``is_k2``.
    """
    if g.n == 0:
        return BistableResult(False, {"reason": "empty"})
    if not is_connected(g):
        comps = [sorted(c) for c in connected_components(g)]
        return BistableResult(False, {"reason": "disconnected", "components": comps})
    try:
        b = bipartition(g)
    except NotBipartiteError as exc:
        return BistableResult(
            False, {"reason": "not_bipartite", "odd_cycle": list(exc.odd_cycle)}
        )
    if g.n == 1:
        return BistableResult(False, {"reason": "single_vertex"})
    m = maximum_matching(g, b)
    if not m.is_perfect(g.n):
        pair = sorted(stable_core(g, b))[:2]
        return BistableResult(
            False,
            {"reason": "no_perfect_matching", "uncoverable_pair": pair},
        )
    if g.n == 2:
        return BistableResult(
            True,
            {
                "stability_systems": [sorted(b.class_a), sorted(b.class_b)],
                "perfect_matchings": [sorted(m.edges)],
            },
            is_k2=True,
        )
    cls = classify_edges(g, b)
    forbidden = sorted(cls.forbidden)
    if forbidden:
        e = forbidden[0]
        third = _third_system_from_forbidden(g, e)
        return BistableResult(
            False,
            {
                "reason": "forbidden_edge",
                "forbidden_edge": e,
                "third_stability_system": sorted(third),
            },
        )
    pm2 = _second_perfect_matching(g, b, cls)
    return BistableResult(
        True,
        {
            "stability_systems": [sorted(b.class_a), sorted(b.class_b)],
            "perfect_matchings": [sorted(m.edges), sorted(pm2)],
        },
    )


def _third_system_from_forbidden(g: Graph, e: Edge) -> frozenset[int]:
    """Maximum stable set of G-a-b for a forbidden edge ab.

    It has size alpha(G) = n/2 and avoids both endpoints, hence differs from
    both color classes.
    """
    u, v = e
    rest = [x for x in range(g.n) if x not in (u, v)]
    sub, mapping = induced_subgraph(g, rest)
    back = {new: old for old, new in mapping.items()}
    ss = maximum_stable_set(sub, bipartition(sub))
    return frozenset(back[x] for x in ss.members)


def _second_perfect_matching(
    g: Graph, b: Bipartition, cls: EdgeClassification
) -> frozenset[Edge]:
    """Toggle one alternating cycle; exists since no edge is mandatory."""
    cycle = alternating_cycle_through(g, b, cls, 0)
    assert cycle is not None
    m = cls.reference_matching
    cycle_edges = {
        normalize_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    }
    return m.edges ^ cycle_edges


# ---------------------------------------------------------------------------
# alpha-stable: full report
# ---------------------------------------------------------------------------


def is_alpha_stable(g: Graph) -> StabilityReport:
    """Full stability report: alpha-stable iff alpha-minus and alpha-plus.

    For a connected bipartite graph the combined verdict amounts to: has a
    perfect matching and no mandatory edge; the certificate on True is an
    alternating cycle through every vertex.
    """
    graph_class = _classify_graph(g)
    minus = is_alpha_minus(g)
    plus = is_alpha_plus(g)
    stable = minus.holds and plus.holds
    alpha_value, mu_value = _alpha_mu(g, graph_class)
    components = []
    for sub, _, back in _component_graphs(g):
        sub_class = _classify_graph(sub)
        sub_alpha, sub_mu = _alpha_mu(sub, sub_class)
        sub_minus = _component_alpha_minus(sub)
        sub_plus, _, _ = _component_alpha_plus(sub)
        components.append(
            ComponentReport(
                vertices=tuple(back),
                graph_class=sub_class,
                alpha=sub_alpha,
                mu=sub_mu,
                alpha_minus=sub_minus,
                alpha_plus=sub_plus,
                alpha_stable=sub_minus.holds and sub_plus.holds,
                bistable=is_bistable(sub).holds,
            )
        )
    bist = is_bistable(g)
    stable_cert: dict[str, Any] = {}
    if stable and graph_class == "bipartite":
        stable_cert = {"alternating_cycles": _cycles_through_all(g)}
    elif not stable:
        stable_cert = {
            **({} if minus.holds else minus.certificate),
            **({} if plus.holds else plus.certificate),
        }
    return StabilityReport(
        graph_class=graph_class,
        alpha_value=alpha_value,
        mu_value=mu_value,
        alpha_minus=minus,
        alpha_plus=plus,
        alpha_stable=stable,
        alpha_stable_certificate=stable_cert,
        bistable=bist,
        per_component=tuple(components),
    )


def _cycles_through_all(g: Graph) -> dict[int, list[int]]:
    """Alternating cycle per vertex, per component, in original ids."""
    cycles: dict[int, list[int]] = {}
    for sub, _, back in _component_graphs(g):
        if sub.n == 1:
            continue
        b = bipartition(sub)
        cls = classify_edges(sub, b)
        for v in range(sub.n):
            cyc = alternating_cycle_through(sub, b, cls, v)
            if cyc is not None:
                cycles[back[v]] = [back[x] for x in cyc]
    return cycles


def _alpha_mu(g: Graph, graph_class: str) -> tuple[int | None, int | None]:
    if g.n == 0:
        return 0, 0
    if graph_class == "bipartite":
        m = maximum_matching(g, bipartition(g))
        return g.n - m.size, m.size
    if graph_class == "chordal":
        res = chordal_mod.is_chordal(g)
        assert res.order is not None
        a = len(chordal_mod.chordal_maximum_stable_set(g, res.order).members)
        mu = oracle_mod.oracle_mu(g) if g.n <= ORACLE_ROUTE_LIMIT else None
        return a, mu
    if g.n <= ORACLE_ROUTE_LIMIT:
        return oracle_mod.oracle_alpha(g), oracle_mod.oracle_mu(g)
    return None, None


# ---------------------------------------------------------------------------
# bistable decomposition (Dulmage-Mendelsohn style elementary pieces)
# ---------------------------------------------------------------------------


def bistable_decomposition(g: Graph) -> BistableDecomposition:
    """Split an alpha-plus-stable bipartite graph into bistable pieces.

    Pieces are the expanded strongly connected components of the matching
    digraph (per component); matched pairs whose node is a trivial SCC are
    the mandatory K2 pieces. Pieces and K2 pieces partition V(G).
    """
    pieces: list[frozenset[int]] = []
    k2: list[Edge] = []
    for sub, _, back in _component_graphs(g):
        try:
            b = bipartition(sub)
        except NotBipartiteError as exc:
            raise NotAlphaPlusError("graph is not bipartite") from exc
        m = maximum_matching(sub, b)
        if not m.is_perfect(sub.n):
            raise NotAlphaPlusError(
                f"component containing vertex {back[0]} has no perfect matching"
            )
        dg = build_matching_digraph(sub, b, m)
        by_scc: dict[int, list[int]] = {}
        for node, scc in enumerate(dg.scc_id):
            by_scc.setdefault(scc, []).append(node)
        for scc in sorted(by_scc, key=lambda s: min(min(dg.members[x]) for x in by_scc[s])):
            nodes = by_scc[scc]
            vertices = sorted(back[v] for node in nodes for v in dg.members[node])
            if len(nodes) == 1:
                k2.append((vertices[0], vertices[1]))
            else:
                pieces.append(frozenset(vertices))
    pieces.sort(key=min)
    k2.sort()
    return BistableDecomposition(pieces=tuple(pieces), k2_pieces=tuple(k2))


# ---------------------------------------------------------------------------
# ear decomposition
# ---------------------------------------------------------------------------


def ear_decomposition(g: Graph) -> EarDecomposition:
    """Hetyei-style construction of a bistable graph: base matching edge
    plus even ears, each attached in different color classes.

    Ears are found by breadth-first walks in the matching digraph that leave
    the already-built node set and stop at first re-entry, so every prefix
    is itself bistable.
    """
    bist = is_bistable(g)
    if not bist.holds:
        raise NotBistableError(f"not bistable: {bist.certificate.get('reason')}")
    b = bipartition(g)
    m = maximum_matching(g, b)
    if g.n == 2:
        return EarDecomposition(base_edge=min(m.edges), ears=())
    dg = build_matching_digraph(g, b, m)
    base_node = dg.node_of[0]
    base_members = dg.members[base_node]
    in_h: set[int] = {base_node}
    unused: set[tuple[int, int, int, int]] = set(dg.arcs)
    ears: list[Ear] = []
    while unused:
        path = _find_ear_path(dg, in_h, unused)
        arcs = path
        start = arcs[0][2]
        end = arcs[-1][3]
        interior: list[int] = []
        for i, (_, to, _, bb) in enumerate(arcs):
            if i == len(arcs) - 1:
                break
            pair = dg.members[to]
            partner = pair[0] if pair[1] == bb else pair[1]
            interior.extend((bb, partner))
            in_h.add(to)
        for arc in arcs:
            unused.discard(arc)
        ears.append(Ear(start=start, interior=tuple(interior), end=end))
    return EarDecomposition(base_edge=(base_members[0], base_members[1]), ears=tuple(ears))


def _find_ear_path(
    dg, in_h: set[int], unused: set[tuple[int, int, int, int]]
) -> list[tuple[int, int, int, int]]:
    """Shortest unused-arc path leaving in_h and re-entering it.

    Interior nodes are outside in_h; a single arc between two in_h nodes is
    a valid (trivial) ear.
    """
    out: dict[int, list[tuple[int, int, int, int]]] = {}
    for arc in sorted(unused):
        out.setdefault(arc[0], []).append(arc)
    # BFS over nodes outside in_h, seeded by arcs leaving in_h
    parent_arc: dict[int, tuple[int, int, int, int]] = {}
    queue: deque[int] = deque()
    for node in sorted(in_h):
        for arc in out.get(node, []):
            to = arc[1]
            if to in in_h:
                return [arc]
            if to not in parent_arc:
                parent_arc[to] = arc
                queue.append(to)
    while queue:
        node = queue.popleft()
        for arc in out.get(node, []):
            to = arc[1]
            if to in in_h:
                path = [arc]
                while path[0][0] not in in_h:
                    path.insert(0, parent_arc[path[0][0]])
                return path
            if to not in parent_arc:
                parent_arc[to] = arc
                queue.append(to)
    raise AssertionError("strongly connected digraph must yield an ear")


def reconstruct_from_ears(decomposition: EarDecomposition) -> Graph:
    """Rebuild the graph (on its original vertex ids) from base and ears."""
    vertices = {decomposition.base_edge[0], decomposition.base_edge[1]}
    edges = {normalize_edge(*decomposition.base_edge)}
    for ear in decomposition.ears:
        vertices.update((ear.start, ear.end))
        vertices.update(ear.interior)
        edges.update(ear.edges())
    n = max(vertices) + 1
    return build_graph(n, edges)


def ear_prefixes(decomposition: EarDecomposition) -> list[Graph]:
    """Graphs G0, G0+H1, ... relabeled densely (for prefix bistability checks)."""
    prefixes = []
    vertices = [decomposition.base_edge[0], decomposition.base_edge[1]]
    edges = {normalize_edge(*decomposition.base_edge)}
    for i in range(len(decomposition.ears) + 1):
        mapping = {v: idx for idx, v in enumerate(sorted(set(vertices)))}
        prefixes.append(
            build_graph(len(mapping), [(mapping[u], mapping[v]) for (u, v) in edges])
        )
        if i < len(decomposition.ears):
            ear = decomposition.ears[i]
            vertices.extend(ear.interior)
            edges.update(ear.edges())
    return prefixes


# ---------------------------------------------------------------------------
# unique / strong unique independence
# ---------------------------------------------------------------------------


def unique_stability_system(g: Graph, b: Bipartition) -> tuple[StableSet | None, tuple[frozenset[int], frozenset[int]] | None]:
    """The unique stability system, or two distinct ones as witnesses.

    Uniqueness test: the stable core has size alpha(G).
    """
    core = stable_core(g, b)
    first = maximum_stable_set(g, b)
    if len(core) == len(first.members):
        return StableSet(members=core, is_maximum=True), None
    movable = sorted(first.members - core)
    v = movable[0]
    rest = [x for x in range(g.n) if x != v]
    sub, mapping = induced_subgraph(g, rest)
    back = {new: old for old, new in mapping.items()}
    second = frozenset(back[x] for x in maximum_stable_set(sub, bipartition(sub)).members)
    assert second != first.members
    return None, (first.members, second)


def strong_unique_independence(g: Graph) -> bool:
    """Unique stability system whose complement is also stable.

    Holds iff the graph is bipartite, alpha-minus-stable, and one color
    class is the unique stability system.
    """
    if not is_connected(g):
        raise NotConnectedError("strong unique independence needs a connected graph")
    try:
        b = bipartition(g)
    except NotBipartiteError:
        return False
    if not is_alpha_minus(g).holds:
        return False
    system, _ = unique_stability_system(g, b)
    if system is None:
        return False
    return system.members in (b.class_a, b.class_b)
