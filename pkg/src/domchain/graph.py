"""Immutable bitmask graphs, vertex-set algebra and graph I/O.

A vertex set is a plain ``int`` whose bit ``v`` marks membership of vertex
``v``.  Graphs keep one such mask per vertex for the open neighborhood.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

__all__ = [
    "MAX_ORDER",
    "GraphError",
    "Graph6Error",
    "NotBipartiteError",
    "Graph",
    "BipartiteView",
    "default_capacity",
    "vertex_set",
    "members",
    "popcount",
    "from_edge_list",
    "complement",
    "disjoint_union",
    "degree",
    "closed_neighborhood",
    "is_dominating",
    "is_independent",
    "private_neighborhood",
    "is_irredundant",
    "is_open_irredundant",
    "induced_subgraph",
    "is_connected",
    "bipartite_matching_number",
    "maximum_matching",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
]

MAX_ORDER = 62
CAPACITY_ENV = "DOMCHAIN_CAPACITY"


class GraphError(ValueError):
    """Invalid graph data or a vertex set that does not fit the graph."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class NotBipartiteError(GraphError):
    pass


def default_capacity() -> int:
    raw = os.environ.get(CAPACITY_ENV)
    if raw is None:
        return 32
    try:
        cap = int(raw)
    except ValueError:
        raise GraphError(f"{CAPACITY_ENV} must be an integer, got {raw!r}") from None
    if not 1 <= cap <= MAX_ORDER:
        raise GraphError(f"{CAPACITY_ENV} must lie in 1..{MAX_ORDER}, got {cap}")
    return cap


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    ``adj[v]`` is the bit mask of N(v).  Instances are immutable and hashable;
    equality is equality of labeled graphs.
    """

    __slots__ = ("order", "adj", "_closed")

    def __init__(self, order: int, adj: Sequence[int], capacity: int | None = None):
        cap = default_capacity() if capacity is None else capacity
        if order < 0:
            raise GraphError("order must be non-negative")
        if order > cap:
            raise GraphError(f"order {order} exceeds vertex capacity {cap}")
        if len(adj) != order:
            raise GraphError(f"expected {order} adjacency rows, got {len(adj)}")
        full = (1 << order) - 1
        rows = tuple(int(r) for r in adj)
        for v, row in enumerate(rows):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} references a vertex outside 0..{order - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "_closed", tuple(r | (1 << v) for v, r in enumerate(rows)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return hash((self.order, self.adj))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.order, self.adj, MAX_ORDER))

    @property
    def full(self) -> int:
        """Mask of the whole vertex set."""
        return (1 << self.order) - 1

    @property
    def closed(self) -> tuple[int, ...]:
        """Closed neighborhoods N[v] as masks."""
        return self._closed

    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(popcount(r) for r in self.adj) // 2

    def degree_sequence(self) -> list[int]:
        return sorted((popcount(r) for r in self.adj), reverse=True)

    def check_set(self, s: int) -> None:
        if s < 0 or s & ~self.full:
            raise GraphError(f"vertex set {s:#x} is not a subset of 0..{self.order - 1}")

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range for order {self.order}")


def from_edge_list(order: int, edges: Iterable[tuple[int, int]], capacity: int | None = None) -> Graph:
    adj = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, adj, capacity)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.order, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], MAX_ORDER)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    shift = 0
    for h in graphs:
        adj.extend(row << shift for row in h.adj)
        shift += h.order
    return Graph(shift, adj)


def degree(g: Graph, v: int) -> int:
    g.check_vertex(v)
    return popcount(g.adj[v])


def closed_neighborhood(g: Graph, s: int) -> int:
    g.check_set(s)
    closed = g.closed
    out = 0
    while s:
        low = s & -s
        out |= closed[low.bit_length() - 1]
        s ^= low
    return out


def is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.full


def is_independent(g: Graph, s: int) -> bool:
    g.check_set(s)
    adj = g.adj
    for v in members(s):
        if adj[v] & s:
            return False
    return True


def private_neighborhood(g: Graph, v: int, s: int) -> int:
    """PN[v, S] = N[v] minus N[S - {v}]."""
    g.check_set(s)
    if not s >> v & 1:
        raise GraphError(f"vertex {v} is not a member of the set")
    return g.closed[v] & ~closed_neighborhood(g, s & ~(1 << v))


def _coverage(closed: Sequence[int], s: int) -> tuple[int, int]:
    # (vertices covered at least once, vertices covered at least twice)
    once = twice = 0
    while s:
        low = s & -s
        c = closed[low.bit_length() - 1]
        twice |= once & c
        once |= c
        s ^= low
    return once, twice


def is_irredundant(g: Graph, s: int) -> bool:
    g.check_set(s)
    closed = g.closed
    _, twice = _coverage(closed, s)
    return all(closed[v] & ~twice for v in members(s))


def is_open_irredundant(g: Graph, s: int) -> bool:
    g.check_set(s)
    closed = g.closed
    _, twice = _coverage(closed, s)
    outside = ~twice & ~s
    return all(closed[v] & outside for v in members(s))


def induced_subgraph(g: Graph, s: int) -> Graph:
    """G[S], relabeled to 0..|S|-1 in ascending order of the original indices."""
    g.check_set(s)
    verts = members(s)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in members(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(verts), adj, MAX_ORDER)


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full


@dataclass(frozen=True)
class BipartiteView:
    """Bipartite graph G[left, right] given by two disjoint stable vertex sets."""

    graph: Graph
    left: int
    right: int

    def __post_init__(self):
        g = self.graph
        g.check_set(self.left)
        g.check_set(self.right)
        if self.left & self.right:
            raise NotBipartiteError("left and right sides overlap")
        for side, name in ((self.left, "left"), (self.right, "right")):
            for v in members(side):
                if g.adj[v] & side:
                    raise NotBipartiteError(f"edge inside the {name} side at vertex {v}")

    @property
    def vertices(self) -> int:
        return self.left | self.right

    @classmethod
    def from_graph(cls, g: Graph) -> BipartiteView:
        """Two-color ``g`` by BFS; vertices of each component's root go left."""
        color: dict[int, int] = {}
        for root in range(g.order):
            if root in color:
                continue
            color[root] = 0
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for u in members(g.adj[v]):
                    if u not in color:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        raise NotBipartiteError(f"odd cycle through edge ({v}, {u})")
        left = vertex_set(v for v, c in color.items() if c == 0)
        return cls(g, left, g.full & ~left)


def maximum_matching(b: BipartiteView) -> dict[int, int]:
    """Maximum matching of ``b`` as a map left vertex -> right vertex.

    Kuhn's augmenting-path algorithm; fine for the vertex counts a mask holds.
    """
    adj = b.graph.adj
    right = b.right
    match_right: dict[int, int] = {}

    def augment(v: int, visited: list[int]) -> bool:
        for u in members(adj[v] & right & ~visited[0]):
            visited[0] |= 1 << u
            if u not in match_right or augment(match_right[u], visited):
                match_right[u] = v
                return True
        return False

    for v in members(b.left):
        augment(v, [0])
    return {v: u for u, v in match_right.items()}


def bipartite_matching_number(b: BipartiteView) -> int:
    return len(maximum_matching(b))


# -- graph6 -----------------------------------------------------------------

def parse_graph6(text: str, capacity: int | None = None) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    data = text.strip()
    base = 0
    if data.startswith(">>graph6<<"):
        data = data[10:]
        base = 10
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", base + i)
    cap = default_capacity() if capacity is None else capacity
    first = ord(data[0]) - 63
    if first == 63:
        # multi-byte order header; always above the single-word capacity
        if len(data) < 4:
            raise Graph6Error("truncated order header", base + len(data))
        if data[1] == "~":
            if len(data) < 8:
                raise Graph6Error("truncated order header", base + len(data))
            order = 0
            for ch in data[2:8]:
                order = (order << 6) | (ord(ch) - 63)
        else:
            order = 0
            for ch in data[1:4]:
                order = (order << 6) | (ord(ch) - 63)
        raise Graph6Error(f"order {order} exceeds vertex capacity {min(cap, MAX_ORDER)}", base)
    order = first
    if order > cap:
        raise Graph6Error(f"order {order} exceeds vertex capacity {cap}", base)
    nbits = order * (order - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: expected {nbytes} bytes, got {len(body)}", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit field", base + 1 + nbytes)
    adj = [0] * order
    k = 0
    for j in range(1, order):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + nbytes)
    return Graph(order, adj, cap)


def emit_graph6(g: Graph) -> str:
    if g.order > MAX_ORDER:
        raise GraphError(f"order {g.order} is not encodable with a one-byte header")
    out = [chr(g.order + 63)]
    acc = nacc = 0
    for j in range(1, g.order):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# -- edge list ----------------------------------------------------------------

def parse_edge_list(text: str, capacity: int | None = None) -> Graph:
    """Read ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list must start with a 'n m' header line")
    try:
        order, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in (ln for ln in lines[1:])]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(order, edges, capacity)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def iter_graph6_lines(lines: Iterable[str], source: str = "<input>") -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line; errors name ``source:line``."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except GraphError as exc:
            raise GraphError(f"{source}:{lineno}: {exc}") from exc
