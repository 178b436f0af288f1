import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from domchain.graph import Graph  # noqa: E402


def random_graph(order: int, rng: random.Random, density: float = 0.5) -> Graph:
    adj = [0] * order
    for u in range(order):
        for v in range(u + 1, order):
            if rng.random() < density:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(order, adj)


@st.composite
def graphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [0] * n
    for (u, v), b in zip(pairs, bits):
        if b:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


@pytest.fixture
def rng():
    return random.Random(20240611)
