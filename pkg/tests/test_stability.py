import pytest

from stabgraph.graph import bipartition, build_graph, induced_subgraph
from stabgraph.matching import maximum_matching
from stabgraph.oracle import (
    bipartite_graphs,
    connected_bipartite_graphs,
    def_alpha_minus,
    def_alpha_plus,
    def_alpha_stable,
    enumerate_maximum_stable_sets,
    oracle_alpha,
)
from stabgraph.stability import (
    NotAlphaPlusError,
    NotBistableError,
    NotConnectedError,
    UnsupportedClassError,
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


def two_c4_bridge():
    return build_graph(
        8,
        [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7), (1, 4)],
    )


class TestAlphaMinus:
    def test_k33(self, k33):
        assert is_alpha_minus(k33).holds

    def test_p4_mandatory_witness(self, p4):
        verdict = is_alpha_minus(p4)
        assert not verdict.holds
        e = verdict.certificate["mandatory_edge"]
        # witness re-verifies: deleting it drops mu, i.e. drops alpha
        assert oracle_alpha(p4.remove_edge(tuple(e))) == oracle_alpha(p4) + 1

    def test_c6_chord(self, c6_chord):
        assert is_alpha_minus(c6_chord).holds

    def test_chordal_route(self, k13, triangle):
        assert is_alpha_minus(k13).holds
        assert not is_alpha_minus(triangle).holds

    def test_oracle_route_c5(self):
        c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert is_alpha_minus(c5).holds == def_alpha_minus(c5)

    def test_unsupported_class(self):
        c17 = build_graph(17, [(i, (i + 1) % 17) for i in range(17)])
        with pytest.raises(UnsupportedClassError):
            is_alpha_minus(c17)

    def test_disconnected_rule(self, c4, p4):
        ok = build_graph(8, list(c4.edges) + [(u + 4, v + 4) for u, v in c4.edges])
        assert is_alpha_minus(ok).holds
        mixed = build_graph(8, list(c4.edges) + [(u + 4, v + 4) for u, v in p4.edges])
        verdict = is_alpha_minus(mixed)
        assert not verdict.holds
        assert tuple(verdict.certificate["mandatory_edge"]) in {(4, 5), (6, 7)}

    def test_matches_definition_sweep(self):
        for n in range(1, 7):
            for g in bipartite_graphs(n):
                assert is_alpha_minus(g).holds == def_alpha_minus(g)


class TestAlphaPlus:
    def test_p4_certificate(self, p4):
        verdict = is_alpha_plus(p4)
        assert verdict.holds
        assert verdict.certificate["perfect_matchings"] == [[(0, 1), (2, 3)]]

    def test_p3(self, p3):
        assert not is_alpha_plus(p3).holds

    def test_two_isolated_vertices(self):
        verdict = is_alpha_plus(build_graph(2, []))
        assert not verdict.holds
        assert tuple(verdict.certificate["alpha_dropping_pair"]) == (0, 1)

    def test_one_isolated_vertex_allowed(self, c4):
        g = build_graph(5, c4.edges)  # C4 plus one isolated vertex
        assert is_alpha_plus(g).holds

    def test_unmatched_pair_reverifies(self, k13):
        verdict = is_alpha_plus(k13)
        assert not verdict.holds
        u, v = verdict.certificate["unmatched_pair"]
        assert oracle_alpha(k13.add_edge((u, v))) == oracle_alpha(k13) - 1

    def test_matches_definition_sweep(self):
        for n in range(1, 7):
            for g in bipartite_graphs(n):
                assert is_alpha_plus(g).holds == def_alpha_plus(g)


class TestAlphaStable:
    def test_c4_report(self, c4):
        report = is_alpha_stable(c4)
        assert report.alpha_stable and report.graph_class == "bipartite"
        assert report.alpha_value == 2 and report.mu_value == 2
        cycles = report.alpha_stable_certificate["alternating_cycles"]
        assert set(cycles) == {0, 1, 2, 3}

    def test_p4(self, p4):
        report = is_alpha_stable(p4)
        assert not report.alpha_stable
        assert report.alpha_plus.holds and not report.alpha_minus.holds

    def test_k33(self, k33):
        assert is_alpha_stable(k33).alpha_stable

    def test_report_consistency(self, c6_chord):
        report = is_alpha_stable(c6_chord)
        assert report.alpha_stable == (report.alpha_minus.holds and report.alpha_plus.holds)
        assert len(report.per_component) == 1

    def test_alternating_cycle_certificates_verify(self, k33):
        report = is_alpha_stable(k33)
        m = maximum_matching(k33, bipartition(k33))
        for v, cyc in report.alpha_stable_certificate["alternating_cycles"].items():
            assert v in cyc
            k = len(cyc)
            for i in range(k):
                assert k33.has_edge(cyc[i], cyc[(i + 1) % k])

    def test_matches_definition_sweep(self):
        for n in range(1, 7):
            for g in bipartite_graphs(n):
                assert is_alpha_stable(g).alpha_stable == def_alpha_stable(g)


class TestBistable:
    def test_c4(self, c4):
        res = is_bistable(c4)
        assert res.holds and not res.is_k2
        assert res.certificate["stability_systems"] == [[0, 2], [1, 3]]
        pm1, pm2 = res.certificate["perfect_matchings"]
        assert pm1 != pm2

    def test_p4_third_system(self, p4):
        res = is_bistable(p4)
        assert not res.holds
        third = frozenset(res.certificate["third_stability_system"])
        assert third == frozenset({0, 3})
        assert third in set(enumerate_maximum_stable_sets(p4))
        b = bipartition(p4)
        assert third not in (b.class_a, b.class_b)

    def test_c6_chord(self, c6_chord):
        assert is_bistable(c6_chord).holds

    def test_k2_flag(self):
        res = is_bistable(build_graph(2, [(0, 1)]))
        assert res.holds and res.is_k2

    def test_disconnected(self):
        res = is_bistable(build_graph(4, [(0, 1), (2, 3)]))
        assert not res.holds and res.certificate["reason"] == "disconnected"

    def test_not_bipartite(self, triangle):
        res = is_bistable(triangle)
        assert not res.holds and res.certificate["reason"] == "not_bipartite"

    def test_oracle_equivalence_sweep(self):
        for n in range(2, 8):
            for g in connected_bipartite_graphs(n):
                b = bipartition(g)
                systems = set(enumerate_maximum_stable_sets(g))
                oracle_says = systems == {b.class_a, b.class_b}
                assert is_bistable(g).holds == oracle_says, g


class TestBistableDecomposition:
    def test_c4_single_piece(self, c4):
        dec = bistable_decomposition(c4)
        assert dec.pieces == (frozenset({0, 1, 2, 3}),)
        assert dec.k2_pieces == ()

    def test_p4_k2_pieces(self, p4):
        dec = bistable_decomposition(p4)
        assert dec.pieces == ()
        assert dec.k2_pieces == ((0, 1), (2, 3))

    def test_two_c4_bridge(self):
        dec = bistable_decomposition(two_c4_bridge())
        assert [sorted(p) for p in dec.pieces] == [[0, 1, 2, 3], [4, 5, 6, 7]]
        assert dec.k2_pieces == ()

    def test_requires_alpha_plus(self, p3):
        with pytest.raises(NotAlphaPlusError):
            bistable_decomposition(p3)

    def test_pieces_partition_and_verify(self):
        for n in range(2, 8):
            for g in connected_bipartite_graphs(n):
                if not maximum_matching(g, bipartition(g)).is_perfect(g.n):
                    continue
                dec = bistable_decomposition(g)
                seen = sorted(
                    [v for p in dec.pieces for v in p]
                    + [v for e in dec.k2_pieces for v in e]
                )
                assert seen == list(range(g.n))
                for piece in dec.pieces:
                    sub, _ = induced_subgraph(g, piece)
                    assert is_bistable(sub).holds


class TestEarDecomposition:
    def test_c4(self, c4):
        dec = ear_decomposition(c4)
        assert dec.base_edge == (0, 1)
        assert len(dec.ears) == 1
        ear = dec.ears[0]
        assert (ear.start, list(ear.interior), ear.end) == (0, [3, 2], 1)

    def test_k2_zero_ears(self):
        dec = ear_decomposition(build_graph(2, [(0, 1)]))
        assert dec.base_edge == (0, 1) and dec.ears == ()

    def test_c6_chord_ear_count(self, c6_chord):
        dec = ear_decomposition(c6_chord)
        assert len(dec.ears) == 7 - 6 + 1

    def test_reconstruction_and_prefixes(self, c6_chord, k33):
        for g in (c6_chord, k33):
            dec = ear_decomposition(g)
            rec = reconstruct_from_ears(dec)
            assert rec.n == g.n and rec.edges == g.edges
            for prefix in ear_prefixes(dec):
                assert is_bistable(prefix).holds

    def test_requires_bistable(self, p4):
        with pytest.raises(NotBistableError):
            ear_decomposition(p4)

    def test_ears_attach_across_classes(self, k33):
        b = bipartition(k33)
        for ear in ear_decomposition(k33).ears:
            assert (ear.start in b.class_a) != (ear.end in b.class_a)
            assert len(ear.interior) % 2 == 0


class TestUniqueSystems:
    def test_p3(self, p3):
        system, witnesses = unique_stability_system(p3, bipartition(p3))
        assert system.members == frozenset({0, 2}) and witnesses is None

    def test_c4_not_unique(self, c4):
        system, witnesses = unique_stability_system(c4, bipartition(c4))
        assert system is None
        assert {frozenset(w) for w in witnesses} == {
            frozenset({0, 2}),
            frozenset({1, 3}),
        }

    def test_k13(self, k13):
        system, _ = unique_stability_system(k13, bipartition(k13))
        assert system.members == frozenset({1, 2, 3})

    def test_strong_unique(self, k13, p4, c4):
        assert strong_unique_independence(k13)
        assert not strong_unique_independence(p4)
        assert not strong_unique_independence(c4)

    def test_strong_unique_needs_connected(self):
        with pytest.raises(NotConnectedError):
            strong_unique_independence(build_graph(4, [(0, 1), (2, 3)]))


class TestCorollaries:
    def test_bistable_implies_alpha_stable(self):
        # Cor 4.4 (n >= 4) and Cor 4.5: perfect matching with empty core
        from stabgraph.matching import matching_core

        for n in (4, 6):
            for g in connected_bipartite_graphs(n):
                if not is_bistable(g).holds:
                    continue
                assert is_alpha_stable(g).alpha_stable
                b = bipartition(g)
                assert maximum_matching(g, b).is_perfect(g.n)
                assert not matching_core(g, b)
