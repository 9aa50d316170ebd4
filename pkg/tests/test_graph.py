import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import graphs
from ktbondage.errors import BadParam, InvalidVertexIndex, MissingEdge, ParseError
from ktbondage.generators import complete, cycle, path
from ktbondage.graph import (
    EdgeSet,
    Graph,
    bfs_order,
    components,
    degree,
    disjoint_union,
    has_isolated_vertex,
    is_pendant_edge,
    parse_edge_list,
    remove_edges,
    serialize_edge_list,
    total_degree,
)


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class TestEdgeSet:
    def test_canonical_form(self):
        s = EdgeSet.of([(3, 1), (0, 2), (1, 3)])
        assert s.pairs == ((0, 2), (1, 3))
        assert EdgeSet.of([(1, 3), (2, 0)]) == s

    def test_self_loop_rejected(self):
        with pytest.raises(BadParam):
            EdgeSet.of([(2, 2)])

    def test_contains_either_orientation(self):
        s = EdgeSet.of([(0, 1)])
        assert (1, 0) in s and (0, 1) in s and (0, 2) not in s


class TestGraph:
    def test_adjacency_mirrors_edges(self):
        g = path(4)
        assert g.neighbors(1) == [0, 2]
        assert g.neighbors(3) == [2]

    def test_endpoint_out_of_range(self):
        with pytest.raises(BadParam):
            Graph.from_edges(3, [(0, 3)])

    def test_needs_a_vertex(self):
        with pytest.raises(BadParam):
            Graph(0)

    def test_labels_do_not_affect_equality(self):
        assert Graph.from_edges(2, [(0, 1)], {"x": 0}) == Graph.from_edges(2, [(0, 1)])


class TestRemoveEdges:
    def test_empty_deletion_is_identity(self):
        assert remove_edges(cycle(5), EdgeSet()) == cycle(5)

    def test_cycle_minus_edge_is_path(self):
        assert remove_edges(cycle(5), EdgeSet.of([(0, 4)])) == path(5)
        h = remove_edges(cycle(5), EdgeSet.of([(0, 1)]))
        assert h.m == 4 and bfs_order(h, 1) == [1, 2, 3, 4, 0]

    def test_two_p2_components(self):
        k4 = complete(4)
        h = remove_edges(k4, k4.edges.difference([(0, 1), (2, 3)]))
        assert sorted(len(vs) for vs, _ in components(h)) == [2, 2]
        assert h.edges.pairs == ((0, 1), (2, 3))

    def test_missing_edge(self):
        with pytest.raises(MissingEdge):
            remove_edges(path(3), EdgeSet.of([(0, 2)]))

    @given(graphs(max_n=8), st.data())
    def test_partition_of_edges(self, g, data):
        s = data.draw(st.sets(st.sampled_from(g.edges.pairs)))
        h = remove_edges(g, s)
        assert set(h.edges) | s == set(g.edges)
        assert not set(h.edges) & s
        assert h.m == g.m - len(s)


class TestIsolation:
    def test_examples(self):
        assert not has_isolated_vertex(path(3))
        assert has_isolated_vertex(Graph(1))
        assert has_isolated_vertex(remove_edges(star(3), EdgeSet.of([(0, 1)])))


class TestComponents:
    def test_cycle_single_component(self):
        parts = components(cycle(5))
        assert len(parts) == 1 and parts[0][1].n == 5

    def test_two_p2(self):
        parts = components(disjoint_union(path(2), path(2)))
        assert [vs for vs, _ in parts] == [[0, 1], [2, 3]]

    def test_k5_disconnect_p2(self):
        # cut the pair {3, 4} away from K_5: all 6 edges between {0,1,2} and {3,4}
        k5 = complete(5)
        cut = EdgeSet.of([(u, v) for u in (0, 1, 2) for v in (3, 4)])
        assert len(cut) == 2 * 5 - 4
        parts = components(remove_edges(k5, cut))
        assert sorted(h.n for _, h in parts) == [2, 3]

    @given(graphs(max_n=9))
    def test_parts_connected_and_separated(self, g):
        parts = components(g)
        seen = []
        for vs, h in parts:
            assert len(bfs_order(h)) == h.n
            seen.extend(vs)
        assert sorted(seen) == list(range(g.n))
        owner = {v: i for i, (vs, _) in enumerate(parts) for v in vs}
        assert all(owner[u] == owner[v] for u, v in g.edges)
        # ordered by smallest contained vertex
        assert [vs[0] for vs, _ in parts] == sorted(vs[0] for vs, _ in parts)


class TestDegrees:
    def test_pendant_edges(self):
        assert is_pendant_edge(path(3), (0, 1))
        assert not is_pendant_edge(cycle(4), (0, 1))
        assert all(is_pendant_edge(star(3), e) for e in star(3).edges)

    def test_pendant_requires_edge(self):
        with pytest.raises(MissingEdge):
            is_pendant_edge(path(3), (0, 2))

    def test_degree_examples(self):
        assert total_degree(complete(5)) == 20
        k5 = complete(5)
        assert total_degree(remove_edges(k5, list(k5.edges)[:4])) == 12
        assert degree(path(4), 1) == 2

    @given(graphs(max_n=10))
    def test_handshake(self, g):
        assert total_degree(g) == 2 * g.m


class TestEdgeListFormat:
    def test_parse_path(self):
        assert parse_edge_list("3\n0 1\n1 2\n") == path(3)

    def test_isolated_vertices_parse(self):
        g = parse_edge_list("2\n")
        assert g.n == 2 and g.m == 0 and has_isolated_vertex(g)

    def test_out_of_range_vertex(self):
        with pytest.raises(InvalidVertexIndex):
            parse_edge_list("3\n0 3\n")

    def test_comments_blank_lines_and_crlf(self):
        g = parse_edge_list("# a path\r\n3\r\n\r\n0 1  # first\r\n2 1\r\n")
        assert g == path(3)

    @pytest.mark.parametrize("text, line", [
        ("3\n0 1\n1 0\n", 3),
        ("3\n0 0\n", 2),
        ("x\n", 1),
        ("3\n0 1 2\n", 2),
        ("3\n0 a\n", 2),
        ("", 1),
        ("0\n", 1),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_edge_list(text)
        assert info.value.line == line

    @given(graphs(max_n=10))
    def test_round_trip(self, g):
        text = serialize_edge_list(g)
        assert parse_edge_list(text) == g
        assert serialize_edge_list(parse_edge_list(text)) == text
