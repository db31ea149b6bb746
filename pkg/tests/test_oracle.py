import itertools

import pytest

from stabgraph.graph import all_pairs, build_graph
from stabgraph.oracle import (
    BudgetExceededError,
    OracleBudget,
    bipartite_graphs,
    canonical_form,
    connected_bipartite_graphs,
    connected_chordal_graphs,
    def_alpha_minus,
    def_alpha_plus,
    def_alpha_stable,
    enumerate_connected_bipartite,
    enumerate_maximum_matchings,
    enumerate_maximum_stable_sets,
    oracle_alpha,
    oracle_mu,
    oracle_stable_core,
    sample_connected_bipartite,
    small_graphs,
    trees,
)


def brute_alpha(g):
    best = 0
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size
    return best


class TestExactAlpha:
    def test_c5(self):
        c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert oracle_alpha(c5) == 2

    def test_k33(self, k33):
        assert oracle_alpha(k33) == 3

    def test_petersen(self, petersen):
        assert oracle_alpha(petersen) == brute_alpha(petersen) == 4

    def test_vs_brute_force_sweep(self):
        for n in range(1, 7):
            for g in small_graphs(n):
                assert oracle_alpha(g) == brute_alpha(g)

    def test_budget(self, c4):
        with pytest.raises(BudgetExceededError):
            oracle_alpha(c4, OracleBudget(max_vertices_exact_alpha=3))

    def test_bad_budget_rejected(self):
        with pytest.raises(ValueError):
            OracleBudget(max_vertices_exact_alpha=0)


class TestMu:
    def test_triangle(self, triangle):
        assert oracle_mu(triangle) == 1

    def test_petersen(self, petersen):
        assert oracle_mu(petersen) == 5


class TestEnumerations:
    def test_stable_sets_p4(self, p4):
        assert [sorted(s) for s in enumerate_maximum_stable_sets(p4)] == [
            [0, 2],
            [0, 3],
            [1, 3],
        ]

    def test_stable_sets_c4(self, c4):
        assert [sorted(s) for s in enumerate_maximum_stable_sets(c4)] == [[0, 2], [1, 3]]

    def test_stable_sets_p3(self, p3):
        assert [sorted(s) for s in enumerate_maximum_stable_sets(p3)] == [[0, 2]]

    def test_matchings_p3(self, p3):
        assert [sorted(m) for m in enumerate_maximum_matchings(p3)] == [
            [(0, 1)],
            [(1, 2)],
        ]

    def test_matchings_c4(self, c4):
        assert [sorted(m) for m in enumerate_maximum_matchings(c4)] == [
            [(0, 1), (2, 3)],
            [(0, 3), (1, 2)],
        ]

    def test_matchings_p4(self, p4):
        assert [sorted(m) for m in enumerate_maximum_matchings(p4)] == [[(0, 1), (2, 3)]]

    def test_stable_sets_complete_by_brute_force(self):
        for n in range(1, 6):
            for g in small_graphs(n):
                a = brute_alpha(g)
                want = [
                    frozenset(c)
                    for c in itertools.combinations(range(g.n), a)
                    if not any(
                        g.has_edge(u, v) for u, v in itertools.combinations(c, 2)
                    )
                ]
                assert enumerate_maximum_stable_sets(g) == sorted(want, key=sorted)


class TestDefinitions:
    def test_alpha_minus(self, k33, p4):
        assert def_alpha_minus(k33)
        assert not def_alpha_minus(p4)
        assert not def_alpha_minus(build_graph(2, [(0, 1)]))

    def test_alpha_plus(self, p4, p3, c4):
        assert def_alpha_plus(p4)
        assert not def_alpha_plus(p3)
        assert def_alpha_plus(c4)

    def test_alpha_stable(self, c4, p4, c6_chord):
        assert def_alpha_stable(c4)
        assert not def_alpha_stable(p4)
        assert def_alpha_stable(c6_chord)

    def test_stable_core(self, p3, c4):
        assert oracle_stable_core(p3) == frozenset({0, 2})
        assert oracle_stable_core(c4) == frozenset()


class TestEnumeration:
    def test_connected_bipartite_counts(self):
        # frozen after the first verified run; n=1..8
        expected = [1, 1, 1, 3, 5, 17, 44, 182]
        for n, want in enumerate(expected, start=1):
            assert enumerate_connected_bipartite(n) == want

    def test_sink_callback(self):
        seen = []
        count = enumerate_connected_bipartite(4, sink=seen.append)
        assert count == len(seen) == 3
        assert all(g.n == 4 for g in seen)

    def test_bipartite_with_disconnected_count(self):
        assert len(bipartite_graphs(8)) == 303

    def test_chordal_counts(self):
        expected = [1, 1, 2, 5, 15, 58, 272]
        for n, want in enumerate(expected, start=1):
            assert len(connected_chordal_graphs(n)) == want

    def test_tree_counts(self):
        expected = [1, 1, 1, 2, 3, 6, 11, 23, 47]
        for n, want in enumerate(expected, start=1):
            assert len(trees(n)) == want

    def test_small_graph_counts(self):
        assert [len(small_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]

    def test_no_isomorphic_duplicates_by_fingerprint(self):
        for n in range(2, 7):
            graphs = connected_bipartite_graphs(n)
            fingerprints = [
                (
                    tuple(sorted(g.degree(v) for v in range(g.n))),
                    oracle_alpha(g),
                    oracle_mu(g),
                    len(g.edges) - g.n + 1,  # cycle space dimension (connected)
                )
                for g in graphs
            ]
            # fingerprints may collide, but canonical forms must not
            keys = {canonical_form(g) for g in graphs}
            assert len(keys) == len(graphs)
            assert len(fingerprints) == len(graphs)

    def test_enumeration_budget(self):
        with pytest.raises(BudgetExceededError):
            connected_bipartite_graphs(9)

    def test_canonical_form_is_isomorphism_invariant(self):
        import random

        rng = random.Random(3)
        for n in range(2, 7):
            for g in small_graphs(n)[:10]:
                perm = list(range(n))
                rng.shuffle(perm)
                relabeled = build_graph(
                    n, [(perm[u], perm[v]) for (u, v) in g.edges]
                )
                assert canonical_form(g) == canonical_form(relabeled)


class TestSampler:
    def test_reproducible(self):
        a = sample_connected_bipartite(10, 5, seed=42)
        b = sample_connected_bipartite(10, 5, seed=42)
        assert a == b

    def test_connected_and_bipartite(self):
        from stabgraph.graph import is_bipartite, is_connected

        for g in sample_connected_bipartite(9, 10, seed=1):
            assert g.n == 9 and is_connected(g) and is_bipartite(g)
