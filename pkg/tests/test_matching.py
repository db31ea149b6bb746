import itertools

import pytest

from stabgraph.graph import bipartition, build_graph, is_connected
from stabgraph.matching import (
    NotConnectedError,
    alpha,
    alpha_preserving_spanning_tree,
    has_perfect_matching,
    konig_cover,
    matching_core,
    maximum_matching,
    maximum_stable_set,
    stable_core,
)
from stabgraph.oracle import (
    bipartite_graphs,
    connected_bipartite_graphs,
    enumerate_maximum_matchings,
    enumerate_maximum_stable_sets,
    oracle_alpha,
)


def brute_alpha(g):
    """Independent check: largest stable subset by direct enumeration."""
    for size in range(g.n, -1, -1):
        for combo in itertools.combinations(range(g.n), size):
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size
    return 0


class TestMaximumMatching:
    def test_c4_perfect(self, c4):
        m = maximum_matching(c4, bipartition(c4))
        assert m.size == 2 and m.is_perfect(4)

    def test_p3(self, p3):
        assert maximum_matching(p3, bipartition(p3)).size == 1

    def test_k33(self, k33):
        assert maximum_matching(k33, bipartition(k33)).size == 3

    def test_deterministic(self, c6_chord):
        b = bipartition(c6_chord)
        assert maximum_matching(c6_chord, b) == maximum_matching(c6_chord, b)

    def test_matching_is_valid(self, c6_chord):
        m = maximum_matching(c6_chord, bipartition(c6_chord))
        covered = [v for e in m.edges for v in e]
        assert len(covered) == len(set(covered))
        assert all(e in c6_chord.edges for e in m.edges)


class TestAlpha:
    @pytest.mark.parametrize(
        "fixture,expected", [("c4", 2), ("p3", 2), ("k33", 3)]
    )
    def test_named(self, fixture, expected, request):
        g = request.getfixturevalue(fixture)
        assert alpha(g, bipartition(g)) == expected

    def test_vs_brute_force(self):
        for n in range(1, 7):
            for g in bipartite_graphs(n):
                assert alpha(g, bipartition(g)) == brute_alpha(g)


class TestKonigCover:
    def test_p3_center(self, p3):
        b = bipartition(p3)
        assert konig_cover(p3, b, maximum_matching(p3, b)) == frozenset({1})

    def test_cover_properties_small_sweep(self):
        for n in range(1, 7):
            for g in bipartite_graphs(n):
                b = bipartition(g)
                m = maximum_matching(g, b)
                cover = konig_cover(g, b, m)
                assert len(cover) == m.size
                assert all(u in cover or v in cover for u, v in g.edges)

    def test_k33_one_class(self, k33):
        b = bipartition(k33)
        cover = konig_cover(k33, b, maximum_matching(k33, b))
        assert cover in (b.class_a, b.class_b)


class TestMaximumStableSet:
    def test_p3(self, p3):
        assert maximum_stable_set(p3, bipartition(p3)).members == frozenset({0, 2})

    def test_c4_color_class(self, c4):
        b = bipartition(c4)
        assert maximum_stable_set(c4, b).members in (b.class_a, b.class_b)

    def test_k1(self):
        g = build_graph(1, [])
        assert maximum_stable_set(g, bipartition(g)).members == frozenset({0})


class TestPerfectMatching:
    def test_examples(self, p4, p3, c6):
        assert has_perfect_matching(p4, bipartition(p4))
        assert not has_perfect_matching(p3, bipartition(p3))
        assert has_perfect_matching(c6, bipartition(c6))


class TestCores:
    def test_stable_core_examples(self, c4, p3, p4):
        assert stable_core(c4, bipartition(c4)) == frozenset()
        assert stable_core(p3, bipartition(p3)) == frozenset({0, 2})
        assert stable_core(p4, bipartition(p4)) == frozenset()

    def test_matching_core_examples(self, c4, p3, p4):
        assert matching_core(p4, bipartition(p4)) == frozenset({(0, 1), (2, 3)})
        assert matching_core(c4, bipartition(c4)) == frozenset()
        assert matching_core(p3, bipartition(p3)) == frozenset()

    def test_p5_warm_start_tries_both_endpoints(self, p5):
        # deleting 0-1 strands vertex 0 but an augmentation from vertex 1
        # still restores mu, so nothing is mandatory
        assert matching_core(p5, bipartition(p5)) == frozenset()

    def test_cores_equal_enumerated_intersections(self):
        for n in range(1, 7):
            for g in bipartite_graphs(n):
                b = bipartition(g)
                systems = enumerate_maximum_stable_sets(g)
                assert stable_core(g, b) == frozenset.intersection(*systems)
                matchings = enumerate_maximum_matchings(g)
                expected = (
                    frozenset.intersection(*matchings) if matchings else frozenset()
                )
                assert matching_core(g, b) == expected

    def test_connected_core_never_size_one(self):
        for n in range(2, 8):
            for g in connected_bipartite_graphs(n):
                assert len(stable_core(g, bipartition(g))) != 1


class TestSpanningTree:
    def test_c4_gives_path(self, c4):
        t = alpha_preserving_spanning_tree(c4, bipartition(c4))
        assert len(t.edges) == 3
        assert oracle_alpha(t) == 2

    def test_tree_identity(self, p4):
        t = alpha_preserving_spanning_tree(p4, bipartition(p4))
        assert t.edges == p4.edges

    def test_c6_chord(self, c6_chord):
        t = alpha_preserving_spanning_tree(c6_chord, bipartition(c6_chord))
        assert len(t.edges) == 5
        assert has_perfect_matching(t, bipartition(t))
        assert oracle_alpha(t) == 3 == oracle_alpha(c6_chord)

    def test_disconnected_rejected(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        with pytest.raises(NotConnectedError):
            alpha_preserving_spanning_tree(g, bipartition(g))

    def test_properties_sweep(self):
        for n in range(2, 8):
            for g in connected_bipartite_graphs(n):
                b = bipartition(g)
                t = alpha_preserving_spanning_tree(g, b)
                assert t.edges <= g.edges
                assert len(t.edges) == g.n - 1
                assert is_connected(t)
                assert oracle_alpha(t) == oracle_alpha(g)
                assert maximum_matching(g, b).edges <= t.edges
