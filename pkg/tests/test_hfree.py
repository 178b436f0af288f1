import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from domchain.corpus import atlas, labeled_graphs, labeled_graphs_upto
from domchain.families import (
    bistar, clique_matching, clique_pendant, complete, complete_bipartite, cycle, empty, enumerate_bistar_variants,
    generate, path, star_pendant,
)
from domchain.graph import GraphError, induced_subgraph, is_connected
from domchain.hfree import (
    BistarVariants, ForbiddenFamily, contains_bistar_variant, contains_induced, family_leq, induced_paths,
    is_family_free, is_isomorphic, longest_induced_path,
)
from naive import has_induced_copy

G = generate


@pytest.mark.parametrize("g, h, present", [
    (path(5), path(3), True),
    (complete_bipartite(3, 3), complete(3), False),
    (complete_bipartite(2, 2), clique_matching(2), True),
    (cycle(5), path(4), True),
    (cycle(5), cycle(4), False),
])
def test_examples(g, h, present):
    assert (contains_induced(G(g), G(h)) is not None) == present


def test_match_is_induced_copy():
    g, h = G(clique_pendant(4)), G(path(4))
    m = contains_induced(g, h)
    assert m is not None
    for a in range(h.order):
        for b in range(h.order):
            if a != b:
                assert h.has_edge(a, b) == g.has_edge(m.mapping[a], m.mapping[b])
    assert is_isomorphic(induced_subgraph(g, m.witness), h)


def test_against_brute_force(rng):
    small = list(labeled_graphs_upto(4))
    for _ in range(300):
        g = random_graph(rng.randint(1, 7), rng, rng.random())
        h = rng.choice(small)
        assert (contains_induced(g, h) is not None) == has_induced_copy(g, h)


@settings(max_examples=100, deadline=None)
@given(graphs(max_order=7))
def test_reflexive(g):
    assert contains_induced(g, g) is not None
    assert is_isomorphic(g, g)


def test_transitive_on_sample(rng):
    for _ in range(200):
        a = random_graph(rng.randint(5, 8), rng, rng.random())
        b = induced_subgraph(a, rng.getrandbits(a.order) or 1)
        c = induced_subgraph(b, rng.getrandbits(b.order) or 1)
        assert contains_induced(a, b) is not None and contains_induced(b, c) is not None
        assert contains_induced(a, c) is not None


def test_family_free_examples():
    assert is_family_free(G(cycle(7)), ForbiddenFamily((complete(3),)))
    res = is_family_free(G(star_pendant(3)), ForbiddenFamily((star_pendant(3), clique_pendant(3), path(3))))
    assert not res and res.member is not None
    assert is_family_free(G(clique_matching(3)), ForbiddenFamily((complete_bipartite(1, 3), clique_pendant(3), path(6))))


def test_family_leq():
    assert family_leq(ForbiddenFamily((path(2),)), ForbiddenFamily((cycle(5), complete(4))))
    res = family_leq(ForbiddenFamily((complete(3),)), ForbiddenFamily((complete_bipartite(3, 3),)))
    assert not res and res.counterexample == G(complete_bipartite(3, 3))
    ramsey_base = ForbiddenFamily((complete_bipartite(1, 1), empty(2)))
    assert family_leq(ramsey_base, ForbiddenFamily(tuple(labeled_graphs(3))))


def test_family_leq_reflexive_and_transitive():
    f1 = ForbiddenFamily((path(3),))
    f2 = ForbiddenFamily((path(4), cycle(5)))
    f3 = ForbiddenFamily((path(6), bistar(2, 2)))
    assert family_leq(f2, f2)
    assert family_leq(f1, f2) and family_leq(f2, f3) and family_leq(f1, f3)


class TestBistarVariants:
    def test_examples(self):
        assert contains_bistar_variant(G(bistar(2, 2)), 2, 2) is not None
        assert contains_bistar_variant(G(cycle(4)), 1, 2) is not None
        assert contains_bistar_variant(G(complete(4)), 1, 2) is None
        with pytest.raises(GraphError):
            contains_bistar_variant(G(complete(4)), 1, 1)

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_enumeration(self, n):
        members = list(enumerate_bistar_variants(n, 2))
        rng = random.Random(n)
        # every graph of order <= 7 up to isomorphism, plus random order-8 graphs
        corpus = atlas() + [random_graph(8, rng, rng.random()) for _ in range(300)]
        for g in corpus:
            want = any(contains_induced(g, h) is not None for h in members)
            assert (contains_bistar_variant(g, n, 2) is not None) == want

    def test_hit_structure(self):
        g = G(bistar(2, 3))
        hit = contains_bistar_variant(g, 2, 3)
        assert len(hit.path) == 3 and bin(hit.witness).count("1") == 7

    def test_family_member(self):
        fam = ForbiddenFamily((BistarVariants(1, 2),))
        assert not is_family_free(G(cycle(4)), fam)
        assert is_family_free(G(complete(4)), fam)
        assert len(fam.expand()) == 2


class TestPaths:
    def test_induced_paths_count(self):
        # every oriented induced P3 of C5
        assert len(list(induced_paths(G(cycle(5)), 3))) == 10
        assert list(induced_paths(G(complete(3)), 3)) == []

    @pytest.mark.parametrize("spec, k", [(path(7), 7), (cycle(7), 6), (complete(4), 2), (empty(3), 1)])
    def test_longest(self, spec, k):
        assert longest_induced_path(G(spec)) == k

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=7))
    def test_longest_matches_matcher(self, g):
        k = longest_induced_path(g)
        assert contains_induced(g, G(path(k))) is not None
        if k < g.order:
            assert contains_induced(g, G(path(k + 1))) is None


def test_forbidden_family_validation():
    with pytest.raises(GraphError):
        ForbiddenFamily(())
    fam = ForbiddenFamily((path(4), complete(3)), "x")
    assert str(fam.without(0)) == "x-P4{K3}"
