"""Graph corpora: labeled exhaustive enumeration and graph6 files."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from importlib import resources
from itertools import combinations
from pathlib import Path

from .graph import Graph, GraphError, iter_graph6_lines, is_connected

__all__ = [
    "MAX_LABELED_ORDER",
    "ATLAS_COUNTS",
    "labeled_graphs",
    "labeled_graphs_upto",
    "read_graph6_file",
    "atlas",
    "connected",
]

MAX_LABELED_ORDER = 7

# graphs on n vertices up to isomorphism, n = 1..7
ATLAS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^C(n,2)`` labeled graphs on ``n`` vertices; bit ``k`` of the code is the k-th pair."""
    if n > MAX_LABELED_ORDER:
        raise GraphError(f"labeled enumeration is capped at order {MAX_LABELED_ORDER}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        k = 0
        c = code
        while c:
            if c & 1:
                u, v = pairs[k]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            c >>= 1
            k += 1
        yield Graph(n, adj)


def labeled_graphs_upto(n: int, start: int = 1) -> Iterator[Graph]:
    for order in range(start, n + 1):
        yield from labeled_graphs(order)


def read_graph6_file(path: str | Path) -> list[Graph]:
    path = Path(path)
    with path.open() as fh:
        return [g for _, g in iter_graph6_lines(fh, str(path))]


def atlas(max_order: int = 7, min_order: int = 1) -> list[Graph]:
    """One graph per isomorphism class for every order in ``min_order..max_order`` (at most 7)."""
    if max_order > 7:
        raise GraphError("the bundled corpus stops at order 7; ingest a graph6 file for more")
    text = resources.files("domchain").joinpath("data/graphs_upto7.g6").read_text()
    graphs = [g for _, g in iter_graph6_lines(text.splitlines(), "graphs_upto7.g6")]
    return [g for g in graphs if min_order <= g.order <= max_order]


def connected(graphs: Iterable[Graph]) -> Iterator[Graph]:
    return (g for g in graphs if is_connected(g))
