import pickle
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graphs
from domchain.corpus import labeled_graphs, labeled_graphs_upto
from domchain.graph import (
    BipartiteView,
    Graph,
    Graph6Error,
    GraphError,
    NotBipartiteError,
    bipartite_matching_number,
    complement,
    default_capacity,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    from_edge_list,
    induced_subgraph,
    is_connected,
    is_dominating,
    is_independent,
    is_irredundant,
    is_open_irredundant,
    iter_graph6_lines,
    maximum_matching,
    members,
    parse_edge_list,
    parse_graph6,
    private_neighborhood,
    vertex_set,
)


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


class TestConstruction:
    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            Graph(2, [0b10, 0])

    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            Graph(1, [1])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            from_edge_list(3, [(0, 5)])

    def test_capacity(self, monkeypatch):
        assert default_capacity() == 32
        with pytest.raises(GraphError):
            Graph(33, [0] * 33)
        monkeypatch.setenv("DOMCHAIN_CAPACITY", "40")
        assert Graph(33, [0] * 33).order == 33
        monkeypatch.setenv("DOMCHAIN_CAPACITY", "99")
        with pytest.raises(GraphError):
            default_capacity()

    def test_hash_eq_pickle(self):
        g = cycle_graph(5)
        assert g == cycle_graph(5)
        assert hash(g) == hash(cycle_graph(5))
        assert pickle.loads(pickle.dumps(g)) == g

    def test_complement_and_union(self):
        g = path_graph(4)
        assert complement(complement(g)) == g
        assert complement(g).size == 6 - 3
        u = disjoint_union(g, g)
        assert u.order == 8 and u.size == 6 and not is_connected(u)


class TestGraph6:
    @pytest.mark.parametrize("text, order, edges", [
        ("@", 1, []),
        ("A?", 2, []),
        ("A_", 2, [(0, 1)]),
        ("D?{", 5, [(0, 4), (1, 4), (2, 4), (3, 4)]),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ])
    def test_known_strings(self, text, order, edges):
        g = parse_graph6(text)
        assert g.order == order
        assert sorted(g.edges()) == sorted(edges)
        assert emit_graph6(g) == text

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")

    @pytest.mark.parametrize("bad", ["", "A", "D?", "A_?", "Ao", "A\x7f"])
    def test_malformed(self, bad):
        with pytest.raises(Graph6Error) as err:
            parse_graph6(bad)
        assert err.value.offset >= 0

    def test_roundtrip_all_small(self):
        for g in labeled_graphs_upto(5):
            assert parse_graph6(emit_graph6(g)) == g

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_order=20))
    def test_roundtrip_random(self, g):
        assert parse_graph6(emit_graph6(g)) == g

    def test_line_errors_name_location(self):
        with pytest.raises(GraphError, match="f.g6:3"):
            list(iter_graph6_lines(["A_", "", "!!"], "f.g6"))


class TestEdgeList:
    def test_roundtrip(self):
        g = cycle_graph(6)
        assert parse_edge_list(emit_edge_list(g)) == g

    @pytest.mark.parametrize("bad", ["", "3", "3 2\n0 1", "3 1\n0 x", "3 1\n0 1 2"])
    def test_malformed(self, bad):
        with pytest.raises(GraphError):
            parse_edge_list(bad)


class TestPredicates:
    def test_star_center_dominates(self):
        g = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert is_dominating(g, 0b1)
        assert not is_dominating(g, 0b10)
        assert is_independent(g, 0b1110)

    def test_private_neighborhood(self):
        g = path_graph(4)
        s = vertex_set([1, 2])
        assert members(private_neighborhood(g, 1, s)) == [0]
        assert members(private_neighborhood(g, 2, s)) == [3]
        with pytest.raises(GraphError):
            private_neighborhood(g, 0, s)

    def test_clique_pair_is_redundant(self):
        g = from_edge_list(3, list(combinations(range(3), 2)))
        assert is_irredundant(g, 0b1)
        assert not is_irredundant(g, 0b11)

    def test_matched_clique_side_is_open_irredundant(self):
        g = cycle_graph(4)  # two K2 joined by a perfect matching
        assert is_open_irredundant(g, vertex_set([0, 1]))

    def test_open_irredundant_implies_irredundant(self):
        for g in labeled_graphs(5):
            for s in range(1, 1 << 5):
                if is_open_irredundant(g, s):
                    assert is_irredundant(g, s)

    def test_minimal_dominating_iff_dominating_and_irredundant(self):
        for g in labeled_graphs_upto(5):
            for s in range(1, 1 << g.order):
                minimal = is_dominating(g, s) and not any(
                    is_dominating(g, s & ~(1 << v)) for v in members(s)
                )
                assert minimal == (is_dominating(g, s) and is_irredundant(g, s))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=8))
    def test_hereditary(self, g):
        for s in range(1 << g.order):
            if is_independent(g, s) or is_irredundant(g, s):
                for v in members(s):
                    t = s & ~(1 << v)
                    if is_independent(g, s):
                        assert is_independent(g, t)
                    if is_irredundant(g, s):
                        assert is_irredundant(g, t)

    def test_induced_subgraph_relabels(self):
        g = path_graph(5)
        h = induced_subgraph(g, vertex_set([0, 2, 3]))
        assert h.order == 3 and h.edges() == [(1, 2)]


class TestBipartite:
    def test_from_graph(self):
        b = BipartiteView.from_graph(path_graph(5))
        assert bipartite_matching_number(b) == 2
        with pytest.raises(NotBipartiteError):
            BipartiteView.from_graph(cycle_graph(5))

    def test_matching_is_valid(self):
        g = from_edge_list(6, [(0, 3), (0, 4), (1, 3), (2, 5), (1, 5)])
        b = BipartiteView.from_graph(g)
        m = maximum_matching(b)
        assert len(m) == 3
        assert all(g.has_edge(u, v) for u, v in m.items())
        assert len(set(m.values())) == len(m)

    def test_complete_bipartite(self):
        g = from_edge_list(6, [(a, b) for a in range(3) for b in range(3, 6)])
        assert bipartite_matching_number(BipartiteView.from_graph(g)) == 3

    def test_view_validation(self):
        with pytest.raises(GraphError):
            BipartiteView(path_graph(3), 0b011, 0b100)
