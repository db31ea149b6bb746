import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabgraph.graph import (
    GraphError,
    NotBipartiteError,
    ParseError,
    all_pairs,
    bipartite_complement_edges,
    bipartition,
    build_graph,
    complement_edges,
    connected_components,
    induced_subgraph,
    is_n_dominating,
    parse_graph,
    pendant_vertices,
    write_graph,
)


def small_graphs_strategy(max_n=7):
    @st.composite
    def graphs(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = list(all_pairs(n))
        edges = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
        return build_graph(n, edges)

    return graphs()


class TestParse:
    def test_c4(self):
        parsed = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0")
        assert parsed.graph.n == 4
        assert parsed.graph.edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
        assert parsed.duplicate_count == 0

    def test_k1(self):
        parsed = parse_graph("1 0")
        assert parsed.graph.n == 1
        assert not parsed.graph.edges

    def test_p3(self):
        assert parse_graph("3 2\n0 1\n1 2").graph.edges == frozenset({(0, 1), (1, 2)})

    def test_duplicates_collapsed_and_counted(self):
        parsed = parse_graph("3 3\n0 1\n1 0\n1 2")
        assert parsed.graph.edges == frozenset({(0, 1), (1, 2)})
        assert parsed.duplicate_count == 1

    def test_metadata_comments_ignored(self):
        parsed = parse_graph("# family=cycle\n# seed=7\n4 4\n0 1\n1 2\n2 3\n3 0")
        assert parsed.metadata == {"family": "cycle", "seed": "7"}
        assert parsed.graph.n == 4

    @pytest.mark.parametrize(
        "text,line",
        [
            ("4 1\n0 x", 2),
            ("4 1\n0 9", 2),
            ("4 1\n2 2", 2),
            ("nope", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_graph(text)
        assert exc.value.line_number == line

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_graph("3 2\n0 1")

    @given(small_graphs_strategy())
    @settings(max_examples=60, deadline=None)
    def test_write_parse_roundtrip(self, g):
        assert parse_graph(write_graph(g)).graph == g

    def test_writer_sorts_edges(self):
        g = build_graph(4, [(3, 2), (1, 0)])
        assert write_graph(g) == "4 2\n0 1\n2 3\n"


class TestBipartition:
    def test_c4(self, c4):
        b = bipartition(c4)
        assert {b.class_a, b.class_b} == {frozenset({0, 2}), frozenset({1, 3})}
        assert b.class_a == frozenset({0, 2})  # smallest vertex lands in class_a

    def test_triangle_witness(self, triangle):
        with pytest.raises(NotBipartiteError) as exc:
            bipartition(triangle)
        cycle = exc.value.odd_cycle
        assert len(cycle) % 2 == 1
        k = len(cycle)
        assert all(triangle.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))

    def test_p3(self, p3):
        b = bipartition(p3)
        assert b.class_a == frozenset({0, 2})
        assert b.class_b == frozenset({1})

    def test_k1_has_empty_class_b(self):
        b = bipartition(build_graph(1, []))
        assert b.class_a == frozenset({0})
        assert b.class_b == frozenset()

    @given(small_graphs_strategy())
    @settings(max_examples=80, deadline=None)
    def test_partition_invariants_or_odd_walk(self, g):
        try:
            b = bipartition(g)
        except NotBipartiteError as exc:
            cycle = exc.odd_cycle
            assert len(cycle) % 2 == 1
            k = len(cycle)
            for i in range(k):
                assert g.has_edge(cycle[i], cycle[(i + 1) % k])
            return
        assert b.class_a | b.class_b == frozenset(range(g.n))
        assert not (b.class_a & b.class_b)
        for u, v in g.edges:
            assert (u in b.class_a) != (v in b.class_a)


class TestComponents:
    def test_connected(self, c4):
        assert connected_components(c4) == [frozenset({0, 1, 2, 3})]

    def test_two_edges(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert connected_components(g) == [frozenset({0, 1}), frozenset({2, 3})]

    def test_k1(self):
        assert connected_components(build_graph(1, [])) == [frozenset({0})]


class TestInducedSubgraph:
    def test_c4_path(self, c4):
        sub, mapping = induced_subgraph(c4, {0, 1, 2})
        assert sub.n == 3
        assert sub.edges == frozenset({(0, 1), (1, 2)})
        assert mapping == {0: 0, 1: 1, 2: 2}

    def test_identity(self, c6_chord):
        sub, mapping = induced_subgraph(c6_chord, range(6))
        relabeled = {(mapping[u], mapping[v]) for u, v in c6_chord.edges}
        assert {tuple(sorted(e)) for e in relabeled} == set(sub.edges)

    def test_independent_triple_of_c6(self, c6):
        sub, _ = induced_subgraph(c6, {0, 2, 4})
        assert sub.n == 3 and not sub.edges

    def test_out_of_range(self, c4):
        with pytest.raises(GraphError):
            induced_subgraph(c4, {0, 9})


class TestDomination:
    def test_c4(self, c4):
        assert is_n_dominating(c4, {0, 2}, 2) == (True, None)

    def test_p3_center(self, p3):
        assert is_n_dominating(p3, {0, 2}, 2) == (True, None)

    def test_p4_endpoints_fail(self, p4):
        ok, witness = is_n_dominating(p4, {0, 3}, 2)
        assert not ok and witness == 1

    @given(small_graphs_strategy(max_n=6), st.integers(min_value=1, max_value=3))
    @settings(max_examples=60, deadline=None)
    def test_monotone_in_k(self, g, k):
        import random

        d = set(random.Random(0).sample(range(g.n), g.n // 2))
        if is_n_dominating(g, d, k + 1)[0]:
            assert is_n_dominating(g, d, k)[0]


class TestPendantsAndComplements:
    def test_pendants(self, p4, c4, k13):
        assert pendant_vertices(p4) == frozenset({0, 3})
        assert pendant_vertices(c4) == frozenset()
        assert pendant_vertices(k13) == frozenset({1, 2, 3})

    def test_bipartite_complement_c4_empty(self, c4):
        assert bipartite_complement_edges(c4, bipartition(c4)) == []

    def test_bipartite_complement_p4(self, p4):
        assert bipartite_complement_edges(p4, bipartition(p4)) == [(0, 3)]

    def test_complement_k1(self):
        assert complement_edges(build_graph(1, [])) == []

    @given(small_graphs_strategy())
    @settings(max_examples=60, deadline=None)
    def test_complement_partitions_pairs(self, g):
        comp = set(complement_edges(g))
        assert comp.isdisjoint(g.edges)
        assert comp | set(g.edges) == set(all_pairs(g.n))
