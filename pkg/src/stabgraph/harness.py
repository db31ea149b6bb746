"""Theorem harness: every structural characterization re-proved at desk scale.

Each claim sweeps an enumerated substrate (connected bipartite, all
bipartite, connected chordal, trees, or general small graphs) and compares
the polynomial machinery against the exponential oracle. A failing instance
is reported as a counterexample with its edge list; claims never raise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import generators as gen
from . import oracle as oracle_mod
from .chordal import chordal_alpha_minus, chordal_maximum_stable_set, is_chordal
from .edge_classes import (
    allowed_degree,
    alternating_cycle_through,
    classify_edges,
)
from .graph import Graph, bipartition, induced_subgraph, is_n_dominating, pendant_vertices, write_graph
from .matching import (
    alpha,
    alpha_preserving_spanning_tree,
    konig_cover,
    matching_core,
    maximum_matching,
    maximum_stable_set,
    stable_core,
)
from .stability import (
    NotAlphaPlusError,
    bistable_decomposition,
    ear_decomposition,
    ear_prefixes,
    is_alpha_minus,
    is_alpha_plus,
    is_alpha_stable,
    is_bistable,
    reconstruct_from_ears,
    strong_unique_independence,
    unique_stability_system,
)


@dataclass(frozen=True)
class ClaimResult:
    name: str
    instances: int
    passed: bool
    counterexample: dict | None = None


@dataclass(frozen=True)
class HarnessReport:
    claims: tuple[ClaimResult, ...]
    max_n: int
    seed: int | None
    sample: int
    elapsed_seconds: float

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)


@dataclass(frozen=True)
class Claim:
    """One sweepable assertion: check(g) returns None or a failure detail."""

    name: str
    description: str
    substrate: str  # connected-bipartite | bipartite | chordal | trees | general | seeded
    min_n: int = 1
    supports_sampling: bool = False
    check: Callable[[Graph], str | None] = lambda g: None


def _bool_equiv(name_values: list[tuple[str, bool]]) -> str | None:
    values = {v for _, v in name_values}
    if len(values) <= 1:
        return None
    return "; ".join(f"{n}={v}" for n, v in name_values)


# --- claim checks -----------------------------------------------------------


def _check_konig(g: Graph) -> str | None:
    b = bipartition(g)
    m = maximum_matching(g, b)
    a = g.n - m.size
    if a + m.size != g.n:
        return f"alpha+mu = {a + m.size} != n = {g.n}"
    if g.n <= 14:
        oa = oracle_mod.oracle_alpha(g)
        if oa != a:
            return f"Koenig alpha {a} != oracle alpha {oa}"
    cover = konig_cover(g, b, m)
    if len(cover) != m.size:
        return f"cover size {len(cover)} != mu {m.size}"
    if not all(u in cover or v in cover for (u, v) in g.edges):
        return "Koenig cover misses an edge"
    ss = maximum_stable_set(g, b)
    if len(ss.members) != a:
        return "stable set size != alpha"
    if any(g.has_edge(u, v) for u in ss.members for v in ss.members if u < v):
        return "stable set is not stable"
    return None


def _check_alpha_minus_equiv(g: Graph) -> str | None:
    structural = is_alpha_minus(g).holds
    definitional = oracle_mod.def_alpha_minus(g)
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    all_two_dominating = all(is_n_dominating(g, s, 2)[0] for s in systems)
    return _bool_equiv(
        [
            ("structural", structural),
            ("definition", definitional),
            ("all-systems-2-dominating", all_two_dominating),
        ]
    )


def _check_alpha_plus_equiv(g: Graph) -> str | None:
    b = bipartition(g)
    structural = is_alpha_plus(g).holds
    pm = 2 * maximum_matching(g, b).size == g.n
    core_empty = not stable_core(g, b)
    partitioned = (
        len(b.class_a) == len(b.class_b) == alpha(g, b)
    )  # both color classes are stability systems covering V
    checks = [
        ("structural", structural),
        ("perfect-matching", pm),
        ("empty-stable-core", core_empty),
        ("color-classes-partition", partitioned),
    ]
    if g.n <= 14:
        checks.append(("definition", oracle_mod.def_alpha_plus(g)))
    return _bool_equiv(checks)


def _check_alpha_stable_equiv(g: Graph) -> str | None:
    b = bipartition(g)
    report = is_alpha_stable(g)
    m = maximum_matching(g, b)
    pm = m.is_perfect(g.n)
    empty_core_with_pm = pm and not matching_core(g, b)
    degree_ok = False
    cycles_ok = False
    if pm:
        cls = classify_edges(g, b)
        degree_ok = all(c >= 2 for c in allowed_degree(g, cls).values())
        cycles_ok = all(
            alternating_cycle_through(g, b, cls, v) is not None for v in range(g.n)
        )
    try:
        dec = bistable_decomposition(g)
        decomposition_ok = not dec.k2_pieces and all(len(p) >= 4 for p in dec.pieces)
        for piece in dec.pieces:
            sub, _ = induced_subgraph(g, piece)
            if not is_bistable(sub).holds:
                return f"piece {sorted(piece)} not bistable"
        covered = [v for p in dec.pieces for v in p] + [v for e in dec.k2_pieces for v in e]
        if sorted(covered) != list(range(g.n)):
            return "decomposition does not partition V"
    except NotAlphaPlusError:
        decomposition_ok = False
    checks = [
        ("structural", report.alpha_stable),
        ("pm-and-empty-matching-core", empty_core_with_pm),
        ("allowed-degree>=2", degree_ok),
        ("alternating-cycle-per-vertex", cycles_ok),
        ("bistable-decomposition", decomposition_ok),
    ]
    if g.n <= 14:
        checks.append(("definition", oracle_mod.def_alpha_stable(g)))
    return _bool_equiv(checks)


def _check_bistable_equiv(g: Graph) -> str | None:
    b = bipartition(g)
    structural = is_bistable(g).holds
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    two_systems = sorted(map(sorted, systems)) == sorted(
        map(sorted, [b.class_a, b.class_b])
    )
    hall_surplus = _hall_surplus(g, b)
    pm_minus_pairs = all(
        _has_pm_minus(g, a_v, b_v) for a_v in b.class_a for b_v in b.class_b
    )
    cls_ok = False
    m = maximum_matching(g, b)
    if m.is_perfect(g.n):
        cls_ok = not classify_edges(g, b).forbidden
    every_edge_allowed = cls_ok  # connectivity holds on this substrate
    try:
        dec = ear_decomposition(g)
        rec = reconstruct_from_ears(dec)
        ears_ok = (
            rec.n == g.n
            and rec.edges == g.edges
            and len(dec.ears) == len(g.edges) - g.n + 1
        )
    except Exception:
        ears_ok = False
    return _bool_equiv(
        [
            ("structural", structural),
            ("exactly-two-systems", two_systems),
            ("hall-surplus", hall_surplus),
            ("all-deleted-pairs-have-pm", pm_minus_pairs),
            ("every-edge-in-some-pm", every_edge_allowed),
            ("ear-decomposition", ears_ok),
        ]
    )


def _hall_surplus(g: Graph, b) -> bool:
    """|N(X)| > |X| for every proper nonempty subset X of either class."""
    from itertools import combinations

    for side in (sorted(b.class_a), sorted(b.class_b)):
        for size in range(1, len(side)):
            for combo in combinations(side, size):
                neighborhood = set()
                for v in combo:
                    neighborhood.update(g.adj[v])
                if len(neighborhood) <= size:
                    return False
    return True


def _has_pm_minus(g: Graph, a_v: int, b_v: int) -> bool:
    rest = [x for x in range(g.n) if x not in (a_v, b_v)]
    sub, _ = induced_subgraph(g, rest)
    try:
        sb = bipartition(sub)
    except Exception:  # pragma: no cover
        return False
    return 2 * maximum_matching(sub, sb).size == sub.n


def _check_core_not_one(g: Graph) -> str | None:
    b = bipartition(g)
    core = stable_core(g, b)
    if len(core) == 1:
        return f"stable core {sorted(core)} has size 1"
    if g.n <= 14 and core != oracle_mod.oracle_stable_core(g):
        return "stable core disagrees with oracle"
    return None


def _check_chordal_not_alpha_stable(g: Graph) -> str | None:
    if oracle_mod.def_alpha_stable(g):
        return "connected chordal graph is alpha-stable"
    return None


def _check_chordal_greedy_alpha(g: Graph) -> str | None:
    res = is_chordal(g)
    if not res.is_chordal:
        return "enumerated chordal graph not recognized as chordal"
    greedy = chordal_maximum_stable_set(g, res.order)
    oa = oracle_mod.oracle_alpha(g)
    if len(greedy.members) != oa:
        return f"greedy alpha {len(greedy.members)} != oracle {oa}"
    return None


def _check_chordal_alpha_minus(g: Graph) -> str | None:
    holds, _ = chordal_alpha_minus(g)
    definitional = oracle_mod.def_alpha_minus(g)
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    return _bool_equiv(
        [
            ("structural", holds),
            ("definition", definitional),
            ("unique-system", len(systems) == 1),
        ]
    )


def _check_classify_differential(g: Graph) -> str | None:
    b = bipartition(g)
    fast = classify_edges(g, b, method="auto")
    slow = classify_edges(g, b, method="recompute")
    if fast.status != slow.status:
        diff = {
            e: (fast.status[e].value, slow.status[e].value)
            for e in fast.status
            if fast.status[e] != slow.status[e]
        }
        return f"fast/recompute disagree: {diff}"
    if fast.mandatory != matching_core(g, b):
        return "mandatory set != matching core"
    return None


def _check_cores_vs_oracle(g: Graph) -> str | None:
    b = bipartition(g)
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    want_core = frozenset.intersection(*systems) if systems else frozenset()
    if stable_core(g, b) != want_core:
        return "stable core != intersection of stability systems"
    matchings = oracle_mod.enumerate_maximum_matchings(g)
    want_mcore = frozenset.intersection(*matchings) if matchings else frozenset()
    if matching_core(g, b) != want_mcore:
        return "matching core != intersection of maximum matchings"
    return None


def _check_spanning_tree(g: Graph) -> str | None:
    b = bipartition(g)
    t = alpha_preserving_spanning_tree(g, b)
    if len(t.edges) != g.n - 1 or not t.edges <= g.edges:
        return "output is not a spanning subtree"
    if alpha(t, bipartition(t)) != alpha(g, b):
        return "spanning tree changes alpha"
    # Prop 3.6: alpha-plus iff some spanning tree is alpha-plus; the
    # constructed tree contains a maximum matching so it witnesses "some"
    tree_plus = 2 * maximum_matching(t, bipartition(t)).size == t.n
    if is_alpha_plus(g).holds != tree_plus:
        return "alpha-plus disagrees with alpha-preserving spanning tree"
    return None


def _check_pendant_in_some_system(g: Graph) -> str | None:
    if g.n > 14:
        return None
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    for v in pendant_vertices(g):
        if not any(v in s for s in systems):
            return f"pendant {v} in no stability system"
    return None


def _check_two_dominating_def(g: Graph) -> str | None:
    if g.n > 14:
        return None
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    lhs = oracle_mod.def_alpha_minus(g)
    rhs = all(is_n_dominating(g, s, 2)[0] for s in systems)
    return _bool_equiv([("definition", lhs), ("2-dominating", rhs)])


def _check_no_pair_def(g: Graph) -> str | None:
    if g.n > 14:
        return None
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    lhs = oracle_mod.def_alpha_plus(g)
    from itertools import combinations

    rhs = not any(
        all(u in s and w in s for s in systems)
        for u, w in combinations(range(g.n), 2)
    )
    return _bool_equiv([("definition", lhs), ("no-shared-pair", rhs)])


def _check_tree_alpha_plus(g: Graph) -> str | None:
    from .chordal import tree_alpha_plus

    ok, matching, is_p2n = tree_alpha_plus(g)
    checks = [
        ("greedy", ok),
        ("perfect-matching", 2 * maximum_matching(g, bipartition(g)).size == g.n),
    ]
    if g.n <= 14:
        checks.append(("definition", oracle_mod.def_alpha_plus(g)))
    verdict = _bool_equiv(checks)
    if verdict:
        return verdict
    if matching is not None and not all(e in g.edges for e in matching.edges):
        return "certificate matching uses foreign edges"
    is_path = max(g.degree(v) for v in range(g.n)) <= 2
    if is_p2n != (is_path and g.n % 2 == 0):
        return f"is_path_2n flag wrong: {is_p2n}"
    if is_path:
        # Cor 3.3: alpha-plus path <=> even order <=> all pendant distances odd
        odd_distances = _all_pendant_distances_odd(g, sorted(pendant_vertices(g)))
        if not (ok == (g.n % 2 == 0) == odd_distances):
            return (
                f"Cor3.3 mismatch: plus={ok} even-order={g.n % 2 == 0} "
                f"odd-dist={odd_distances}"
            )
    return None


def _all_pendant_distances_odd(g: Graph, pendants: list[int]) -> bool:
    b = bipartition(g)
    return all(
        (u in b.class_a) != (w in b.class_a)
        for i, u in enumerate(pendants)
        for w in pendants[i + 1 :]
    )


def _check_strong_unique(g: Graph) -> str | None:
    if g.n > 14:
        return None
    structural = strong_unique_independence(g)
    systems = oracle_mod.enumerate_maximum_stable_sets(g)
    unique = len(systems) == 1
    def_sui = False
    if unique:
        complement = set(range(g.n)) - systems[0]
        def_sui = not any(
            g.has_edge(u, v) for u in complement for v in complement if u < v
        )
    if structural != def_sui:
        return f"structural={structural} definition={def_sui}"
    b = bipartition(g)
    system, witnesses = unique_stability_system(g, b)
    if (system is not None) != unique:
        return "uniqueness test disagrees with enumeration"
    if system is not None and system.members != systems[0]:
        return "unique system mismatch"
    if witnesses is not None:
        w1, w2 = witnesses
        if w1 == w2 or frozenset(w1) not in systems or frozenset(w2) not in systems:
            return "non-uniqueness witnesses invalid"
    return None


def _check_bistable_implies_stable(g: Graph) -> str | None:
    res = is_bistable(g)
    if not res.holds or g.n < 4:
        return None
    b = bipartition(g)
    if not is_alpha_stable(g).alpha_stable:
        return "bistable graph not alpha-stable (Cor 4.4)"
    m = maximum_matching(g, b)
    if not m.is_perfect(g.n):
        return "bistable graph lacks perfect matching (Cor 4.5)"
    if matching_core(g, b):
        return "bistable graph has a mandatory edge (Cor 4.5)"
    for pref in ear_prefixes(ear_decomposition(g)):
        if not is_bistable(pref).holds:
            return "ear prefix not bistable"
    return None


def _check_negated_konig(g: Graph) -> str | None:
    """Deliberately false claim used to self-test the harness."""
    b = bipartition(g)
    m = maximum_matching(g, b)
    if (g.n - m.size) + m.size == g.n:
        return f"alpha+mu equals n={g.n} (negated claim is false, as expected)"
    return None


CLAIMS: dict[str, Claim] = {
    c.name: c
    for c in [
        Claim(
            "konig",
            "alpha + mu = n, Koenig cover/stable-set validity, oracle agreement",
            substrate="connected-bipartite",
            supports_sampling=True,
            check=_check_konig,
        ),
        Claim(
            "alpha-minus-equiv",
            "structural alpha-minus == definition == all systems 2-dominating",
            substrate="bipartite",
            check=_check_alpha_minus_equiv,
        ),
        Claim(
            "alpha-plus-equiv",
            "alpha-plus == perfect matching == empty stable core == class partition",
            substrate="connected-bipartite",
            min_n=2,  # K1 is vacuously alpha-plus-stable yet has no perfect matching
            supports_sampling=True,
            check=_check_alpha_plus_equiv,
        ),
        Claim(
            "alpha-stable-equiv",
            "five-way alpha-stable equivalence incl. decomposition and cycles",
            substrate="connected-bipartite",
            min_n=4,
            supports_sampling=True,
            check=_check_alpha_stable_equiv,
        ),
        Claim(
            "bistable-equiv",
            "six-way bistability equivalence incl. ears and Hall surplus",
            substrate="connected-bipartite",
            min_n=4,
            check=_check_bistable_equiv,
        ),
        Claim(
            "core-not-one",
            "no connected bipartite graph (n>=2) has stable core of size 1",
            substrate="connected-bipartite",
            min_n=2,
            supports_sampling=True,
            check=_check_core_not_one,
        ),
        Claim(
            "chordal-not-alpha-stable",
            "no connected chordal graph with n>=2 is alpha-stable",
            substrate="chordal",
            min_n=2,
            check=_check_chordal_not_alpha_stable,
        ),
        Claim(
            "chordal-greedy-alpha",
            "PEO greedy stable set is maximum on chordal graphs",
            substrate="chordal",
            check=_check_chordal_greedy_alpha,
        ),
        Claim(
            "chordal-alpha-minus",
            "chordal alpha-minus == definition == unique stability system",
            substrate="chordal",
            check=_check_chordal_alpha_minus,
        ),
        Claim(
            "classify-differential",
            "SCC classification equals per-edge recomputation; mandatory = core",
            substrate="bipartite",
            supports_sampling=True,
            check=_check_classify_differential,
        ),
        Claim(
            "cores-vs-oracle",
            "stable/matching cores equal enumerated intersections",
            substrate="bipartite",
            check=_check_cores_vs_oracle,
        ),
        Claim(
            "spanning-tree",
            "alpha-preserving spanning tree + Prop 3.6 equivalence",
            substrate="connected-bipartite",
            min_n=2,
            supports_sampling=True,
            check=_check_spanning_tree,
        ),
        Claim(
            "pendant-in-system",
            "every pendant vertex lies in some stability system",
            substrate="general",
            check=_check_pendant_in_some_system,
        ),
        Claim(
            "two-dominating-def",
            "alpha-minus definition == every system 2-dominating (any class)",
            substrate="general",
            check=_check_two_dominating_def,
        ),
        Claim(
            "no-pair-def",
            "alpha-plus definition == no vertex pair in all systems (any class)",
            substrate="general",
            check=_check_no_pair_def,
        ),
        Claim(
            "tree-alpha-plus",
            "leaf greedy == perfect matching == definition on trees; Cor 3.3",
            substrate="trees",
            min_n=2,
            check=_check_tree_alpha_plus,
        ),
        Claim(
            "strong-unique",
            "strong unique independence == unique system with stable complement",
            substrate="connected-bipartite",
            check=_check_strong_unique,
        ),
        Claim(
            "bistable-corollaries",
            "bistable n>=4 implies alpha-stable, PM, empty core, bistable prefixes",
            substrate="connected-bipartite",
            min_n=4,
            check=_check_bistable_implies_stable,
        ),
    ]
}

# excluded from default runs; exists to prove the harness reports failures
SELF_TEST_CLAIM = Claim(
    "self-test-negation",
    "deliberately negated Koenig identity; must fail with a counterexample",
    substrate="connected-bipartite",
    check=_check_negated_konig,
)

DEFAULT_CLAIM_NAMES = list(CLAIMS)


def _substrate_graphs(
    substrate: str, max_n: int, min_n: int, seed: int | None, sample: int
) -> Iterable[Graph]:
    exhaustive_to = min(max_n, 8)
    if substrate == "connected-bipartite":
        for n in range(min_n, exhaustive_to + 1):
            yield from oracle_mod.connected_bipartite_graphs(n)
    elif substrate == "bipartite":
        for n in range(min_n, exhaustive_to + 1):
            yield from oracle_mod.bipartite_graphs(n)
    elif substrate == "chordal":
        for n in range(min_n, exhaustive_to + 1):
            yield from oracle_mod.connected_chordal_graphs(n)
    elif substrate == "trees":
        for n in range(min_n, min(max_n, 9) + 1):
            yield from oracle_mod.trees(n)
    elif substrate == "general":
        for n in range(min_n, min(max_n, 6) + 1):
            yield from oracle_mod.small_graphs(n)
        if max_n >= 7:
            base = seed if seed is not None else 0
            for n in range(7, min(max_n, 8) + 1):
                yield from oracle_mod.sample_graphs(n, 120, seed=base + n)
    else:  # pragma: no cover
        raise ValueError(f"unknown substrate {substrate}")


def run_claim(
    claim: Claim, max_n: int = 8, seed: int | None = None, sample: int = 0
) -> ClaimResult:
    instances = 0
    for g in _substrate_graphs(claim.substrate, max_n, claim.min_n, seed, sample):
        instances += 1
        failure = claim.check(g)
        if failure is not None:
            return ClaimResult(
                claim.name,
                instances,
                False,
                {"detail": failure, "graph": write_graph(g)},
            )
    if sample > 0 and claim.supports_sampling and max_n > 8:
        rng_seed = seed if seed is not None else 0
        per_n = max(1, sample // max(1, max_n - 8))
        for n in range(9, max_n + 1):
            for g in oracle_mod.sample_connected_bipartite(n, per_n, seed=rng_seed + n):
                instances += 1
                failure = claim.check(g)
                if failure is not None:
                    return ClaimResult(
                        claim.name,
                        instances,
                        False,
                        {"detail": failure, "graph": write_graph(g)},
                    )
    return ClaimResult(claim.name, instances, True)


def theorem_harness(
    max_n: int = 8,
    claims: list[str] | None = None,
    seed: int | None = None,
    sample: int = 0,
) -> HarnessReport:
    """Run registered claims over enumerated (and optionally sampled) graphs."""
    if max_n > 8 and sample <= 0:
        raise ValueError("max_n > 8 requires a positive --sample count")
    if max_n > 14:
        raise ValueError("sampled runs are limited to max_n <= 14")
    selected = claims if claims is not None else DEFAULT_CLAIM_NAMES
    results = []
    start = time.perf_counter()
    for name in selected:
        if name == SELF_TEST_CLAIM.name:
            claim = SELF_TEST_CLAIM
        elif name in CLAIMS:
            claim = CLAIMS[name]
        else:
            raise ValueError(f"unknown claim {name!r}; known: {', '.join(CLAIMS)}")
        results.append(run_claim(claim, max_n=max_n, seed=seed, sample=sample))
    elapsed = time.perf_counter() - start
    return HarnessReport(
        claims=tuple(results),
        max_n=max_n,
        seed=seed,
        sample=sample,
        elapsed_seconds=elapsed,
    )


def constructive_roundtrip(trials: int, seed: int, max_vertices: int = 40) -> ClaimResult:
    """Generator round-trips: ear growth reconstructs with bistable prefixes;
    substitute and union outputs pass their certified verdicts."""
    rng = __import__("random").Random(seed)
    instances = 0
    for trial in range(trials):
        target = 2 * rng.randint(1, max_vertices // 2)
        grown = gen.ear_growth(target, seed=rng.randrange(1 << 30))
        g = grown.graph
        instances += 1
        rec = reconstruct_from_ears(grown.decomposition)
        if rec.n != g.n or rec.edges != g.edges:
            return ClaimResult(
                "constructive-roundtrip",
                instances,
                False,
                {"detail": "ear reconstruction mismatch", "graph": write_graph(g)},
            )
        if len(grown.decomposition.ears) != len(g.edges) - g.n + 1:
            return ClaimResult(
                "constructive-roundtrip",
                instances,
                False,
                {"detail": "ear count formula violated", "graph": write_graph(g)},
            )
        for pref in ear_prefixes(grown.decomposition):
            if not is_bistable(pref).holds:
                return ClaimResult(
                    "constructive-roundtrip",
                    instances,
                    False,
                    {"detail": "non-bistable ear prefix", "graph": write_graph(g)},
                )
    for trial in range(trials):
        p = rng.choice([2, 3])
        template = gen.ear_growth(2 * p, seed=rng.randrange(1 << 30)).graph
        if len(bipartition(template).class_a) != p:
            template = gen.even_cycle(2 * p)
        pieces = [
            gen.ear_growth(rng.choice([2, 4, 6]), seed=rng.randrange(1 << 30)).graph
            for _ in range(p)
        ]
        out = gen.substitute(template, pieces)
        instances += 1
        if not is_bistable(out).holds:
            return ClaimResult(
                "constructive-roundtrip",
                instances,
                False,
                {"detail": "substitute output not bistable", "graph": write_graph(out)},
            )
    for trial in range(trials):
        count = rng.randint(2, 3)
        pieces = [
            gen.ear_growth(rng.choice([4, 6, 8]), seed=rng.randrange(1 << 30)).graph
            for _ in range(count)
        ]
        result = gen.union_connect(pieces, gen.default_bridges(pieces))
        instances += 1
        if not result.alpha_stable:
            return ClaimResult(
                "constructive-roundtrip",
                instances,
                False,
                {
                    "detail": "union of alpha-stable pieces not alpha-stable",
                    "graph": write_graph(result.graph),
                },
            )
    return ClaimResult("constructive-roundtrip", instances, True)
