import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kshell_attack.exceptions import DomainError, ParseError, PreconditionError, SelfLoopError
from kshell_attack.graph import (
    Graph,
    align_to,
    edge,
    parse_edge_list,
    serialize_edge_list,
)

from conftest import graphs, path, star, triangle


class TestParse:
    def test_triangle(self):
        g = parse_edge_list("0 1\n1 2\n2 0\n")
        assert (g.node_count, g.edge_count) == (3, 3)

    def test_reversed_duplicate_merged(self):
        g = parse_edge_list("0 1\n1 0\n")
        assert (g.node_count, g.edge_count) == (2, 1)

    def test_exact_duplicate_merged(self):
        g = parse_edge_list("a b\na b\nb c\n")
        assert g.edge_count == 2

    def test_bytes_and_streams(self):
        import io

        assert parse_edge_list(b"0 1\n").edge_count == 1
        assert parse_edge_list(io.BytesIO(b"0 1\n1 2")).edge_count == 2

    def test_comments_blank_lines_and_whitespace(self):
        text = "% konect header\n# comment\n\n  x\t\ty  \n y   z 1.0 1234\n"
        g = parse_edge_list(text)
        assert g.labels == ["x", "y", "z"]
        assert g.edges() == [(0, 1), (1, 2)]

    def test_labels_are_dense_by_first_appearance(self):
        g = parse_edge_list("Tyrion Sansa\nJon Sansa\nTyrion Jon\n")
        assert g.labels == ["Tyrion", "Sansa", "Jon"]
        assert g.has_edge(0, 2)

    def test_self_loop_rejected_with_line_number(self):
        with pytest.raises(SelfLoopError) as info:
            parse_edge_list("0 1\n\n2 2\n")
        assert info.value.line == 3

    def test_malformed_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list("0 1\nlonely\n")

    def test_karate(self, karate):
        assert (karate.node_count, karate.edge_count) == (34, 78)


class TestHasEdge:
    def test_basic(self):
        g = triangle()
        assert g.has_edge(0, 1)
        assert not g.has_edge(0, 0)
        assert not path(3).has_edge(0, 2)

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            triangle().has_edge(0, 3)
        with pytest.raises(DomainError):
            triangle().has_edge(-1, 0)

    @given(graphs(), st.data())
    def test_symmetric(self, g, data):
        u = data.draw(st.integers(0, g.node_count - 1))
        v = data.draw(st.integers(0, g.node_count - 1))
        assert g.has_edge(u, v) == g.has_edge(v, u)


class TestMutation:
    def test_remove_gives_path(self):
        g = triangle()
        g.remove_edge(0, 1)
        assert g.degrees() == [1, 1, 2]
        assert g.edge_count == 2

    def test_add_closes_triangle(self):
        g = path(3)
        g.add_edge(0, 2)
        assert g.same_edges(triangle())

    def test_add_present_edge(self):
        with pytest.raises(PreconditionError):
            triangle().add_edge(1, 0)

    def test_remove_absent_edge(self):
        with pytest.raises(PreconditionError):
            path(3).remove_edge(0, 2)

    def test_add_self_loop(self):
        with pytest.raises(PreconditionError):
            path(3).add_edge(1, 1)

    def test_version_bumps(self):
        g = path(3)
        v0 = g.version
        g.add_edge(0, 2)
        assert g.version == v0 + 1

    def test_copy_is_independent(self):
        g = triangle()
        h = g.copy()
        h.remove_edge(0, 1)
        assert g.has_edge(0, 1) and not h.has_edge(0, 1)

    @settings(max_examples=50)
    @given(graphs(max_nodes=10), st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40))
    def test_handshake_after_toggles(self, g, toggles):
        for u, v in toggles:
            if u >= g.node_count or v >= g.node_count or u == v:
                continue
            if g.has_edge(u, v):
                g.remove_edge(u, v)
            else:
                g.add_edge(u, v)
            assert sum(g.degrees()) == 2 * g.edge_count
            assert set(g.edge_list) == {edge(a, b) for a in g.nodes() for b in g.neighbors(a)}
            assert len(g.edge_list) == len(set(g.edge_list))


class TestDegreeSequence:
    def test_triangle(self):
        assert triangle().degree_sequence() == [2, 2, 2]

    def test_star(self):
        assert star(3).degree_sequence() == [1, 1, 1, 3]

    def test_karate_total(self, karate):
        assert sum(karate.degree_sequence()) == 156


class TestSerialize:
    def test_sorted_dense_ids(self):
        g = parse_edge_list("c a\nb a\n")
        assert serialize_edge_list(g) == "0 1\n1 2\n"
        assert serialize_edge_list(g, use_labels=True) == "c a\na b\n"

    @given(graphs())
    def test_roundtrip_preserves_ids_via_labels(self, g):
        h = parse_edge_list(serialize_edge_list(g))
        # Each re-parsed node is labelled with the id it had before.
        back = {(int(h.labels[a]), int(h.labels[b])) for a, b in h.edge_list}
        assert {edge(*e) for e in back} == g.edge_set()
        assert h.edge_count == g.edge_count

    def test_roundtrip_is_a_fixed_point(self, karate):
        once = parse_edge_list(serialize_edge_list(karate))
        twice = parse_edge_list(serialize_edge_list(once))
        assert serialize_edge_list(once) == serialize_edge_list(twice)

    def test_label_roundtrip_and_alignment(self, karate):
        h = parse_edge_list(serialize_edge_list(karate, use_labels=True))
        assert align_to(karate, h).same_edges(karate)

    def test_align_rejects_foreign_nodes(self):
        with pytest.raises(DomainError):
            align_to(parse_edge_list("a b\n"), parse_edge_list("a c\n"))


def test_from_edges_infers_size():
    g = Graph.from_edges([(0, 4)])
    assert g.node_count == 5 and g.degree(2) == 0
