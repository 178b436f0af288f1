import pytest

from domchain.corpus import ATLAS_COUNTS, atlas, connected, labeled_graphs, read_graph6_file
from domchain.graph import GraphError, emit_graph6
from domchain.hfree import is_isomorphic


def test_labeled_counts():
    for n in range(1, 6):
        assert sum(1 for _ in labeled_graphs(n)) == 2 ** (n * (n - 1) // 2)
    with pytest.raises(GraphError):
        next(labeled_graphs(8))


def test_atlas_counts():
    graphs = atlas()
    for n, count in ATLAS_COUNTS.items():
        assert sum(1 for g in graphs if g.order == n) == count
    assert len(list(connected(atlas(5)))) == 1 + 1 + 2 + 6 + 21


def test_atlas_pairwise_distinct():
    by_order = {}
    for g in atlas(6):
        by_order.setdefault(g.order, []).append(g)
    for gs in by_order.values():
        for i, a in enumerate(gs):
            assert not any(is_isomorphic(a, b) for b in gs[i + 1:])


def test_atlas_covers_labeled_order_five():
    reps = atlas(5, 5)
    for g in labeled_graphs(5):
        assert any(is_isomorphic(g, r) for r in reps)


def test_order7_distinct_by_invariants_or_matcher():
    gs = atlas(7, 7)
    buckets = {}
    for g in gs:
        buckets.setdefault((g.size, tuple(g.degree_sequence())), []).append(g)
    for bucket in buckets.values():
        for i, a in enumerate(bucket):
            assert not any(is_isomorphic(a, b) for b in bucket[i + 1:])


def test_read_file(tmp_path):
    f = tmp_path / "x.g6"
    f.write_text("A_\n\nBw\n")
    assert [emit_graph6(g) for g in read_graph6_file(f)] == ["A_", "Bw"]
    f.write_text("A_\nzz\n")
    with pytest.raises(GraphError, match="x.g6:2"):
        read_graph6_file(f)
    with pytest.raises(GraphError):
        atlas(8)
