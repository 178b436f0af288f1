"""Induced-subgraph containment, H-freeness and the family order relation."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple, Union

from .families import FamilySpec, enumerate_bistar_variants, generate
from .graph import Graph, GraphError, emit_graph6, members, popcount

__all__ = [
    "BistarVariants",
    "ForbiddenFamily",
    "Match",
    "FreeResult",
    "LeqResult",
    "contains_induced",
    "is_isomorphic",
    "is_family_free",
    "family_leq",
    "contains_bistar_variant",
    "induced_paths",
    "longest_induced_path",
]


@dataclass(frozen=True)
class BistarVariants:
    """The whole bistar-variant family for fixed ``n`` and ``p`` as one member."""

    n: int
    p: int

    def __str__(self):
        return f"BSvar{self.n}^{self.p}"


Member = Union[FamilySpec, Graph, BistarVariants]


def _member_label(m: Member) -> str:
    if isinstance(m, Graph):
        return emit_graph6(m)
    return str(m)


@dataclass(frozen=True)
class ForbiddenFamily:
    members: tuple
    label: str = ""

    def __post_init__(self):
        if not self.members:
            raise GraphError("a forbidden family needs at least one member")
        object.__setattr__(self, "members", tuple(self.members))
        for m in self.members:
            if not isinstance(m, (FamilySpec, Graph, BistarVariants)):
                raise GraphError(f"cannot expand family member {m!r}")

    def __str__(self):
        body = ", ".join(_member_label(m) for m in self.members)
        return f"{self.label}{{{body}}}" if self.label else f"{{{body}}}"

    def without(self, index: int) -> ForbiddenFamily:
        rest = self.members[:index] + self.members[index + 1:]
        return ForbiddenFamily(rest, f"{self.label}-{_member_label(self.members[index])}" if self.label else "")

    def expand(self) -> list[Graph]:
        """Concrete graphs of the family (bistar variants fully enumerated)."""
        out: list[Graph] = []
        for m in self.members:
            if isinstance(m, Graph):
                out.append(m)
            elif isinstance(m, FamilySpec):
                out.append(generate(m))
            else:
                out.extend(enumerate_bistar_variants(m.n, m.p))
        return out


class Match(NamedTuple):
    witness: int
    mapping: tuple[int, ...]


def _match_order(h: Graph) -> list[int]:
    # greedy: start at a max-degree vertex, then prefer vertices tied to many placed ones
    order: list[int] = []
    placed = 0
    remaining = h.full
    while remaining:
        best, key = -1, None
        for v in members(remaining):
            k = (popcount(h.adj[v] & placed), popcount(h.adj[v]), -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed |= 1 << best
        remaining &= ~(1 << best)
    return order


def contains_induced(g: Graph, h: Graph) -> Match | None:
    """Find ``S`` with ``G[S]`` isomorphic to ``h``; ``None`` when ``h`` is not induced in ``g``.

    Backtracking over an ordering of ``h``: each candidate image must agree with
    every already mapped vertex on adjacency and non-adjacency, and must have
    enough neighbors and non-neighbors left for the pattern vertex.
    """
    if h.order > g.order:
        return None
    if h.order == 0:
        return Match(0, ())
    if h.size > g.size:
        return None
    order = _match_order(h)
    gfull = g.full
    gdeg = [popcount(r) for r in g.adj]
    gcodeg = [g.order - 1 - d for d in gdeg]
    # static candidate masks by degree feasibility
    static = []
    for u in order:
        du = popcount(h.adj[u])
        cu = h.order - 1 - du
        static.append(sum(1 << x for x in range(g.order) if gdeg[x] >= du and gcodeg[x] >= cu))
    # for position i: earlier positions adjacent / non-adjacent to order[i]
    pos = {u: i for i, u in enumerate(order)}
    back = []
    for i, u in enumerate(order):
        adj_prev = [j for j in range(i) if h.adj[u] >> order[j] & 1]
        non_prev = [j for j in range(i) if not h.adj[u] >> order[j] & 1]
        back.append((adj_prev, non_prev))
    k = h.order
    image = [0] * k
    gadj = g.adj

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = static[i] & ~used
        adj_prev, non_prev = back[i]
        for j in adj_prev:
            cand &= gadj[image[j]]
        for j in non_prev:
            cand &= ~gadj[image[j]]
        cand &= gfull
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            image[i] = x
            if rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not rec(0, 0):
        return None
    mapping = tuple(image[pos[u]] for u in range(k))
    return Match(sum(1 << x for x in mapping), mapping)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or g.degree_sequence() != h.degree_sequence():
        return False
    return contains_induced(g, h) is not None


class FreeResult(NamedTuple):
    free: bool
    member: object = None
    witness: int = 0

    def __bool__(self):
        return self.free


def is_family_free(g: Graph, fam: ForbiddenFamily) -> FreeResult:
    for m in fam.members:
        if isinstance(m, BistarVariants):
            hit = contains_bistar_variant(g, m.n, m.p)
            if hit is not None:
                return FreeResult(False, m, hit.witness)
            continue
        h = m if isinstance(m, Graph) else generate(m)
        match = contains_induced(g, h)
        if match is not None:
            return FreeResult(False, m, match.witness)
    return FreeResult(True)


class LeqResult(NamedTuple):
    holds: bool
    counterexample: Graph | None = None

    def __bool__(self):
        return self.holds


def family_leq(f1: ForbiddenFamily, f2: ForbiddenFamily) -> LeqResult:
    """f1 <= f2: every member of f2 contains some member of f1 as an induced subgraph."""
    smaller = f1.expand()
    for h2 in f2.expand():
        if not any(contains_induced(h2, h1) is not None for h1 in smaller):
            return LeqResult(False, h2)
    return LeqResult(True)


# -- induced paths and bistar variants --------------------------------------------------

def induced_paths(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """All induced paths on ``length`` vertices, as vertex tuples in both orientations."""
    adj, closed = g.adj, g.closed

    def extend(path: list[int], blocked: int) -> Iterator[tuple[int, ...]]:
        if len(path) == length:
            yield tuple(path)
            return
        last = path[-1]
        # next vertex: adjacent to the last, not adjacent to or equal to any earlier vertex
        for x in members(adj[last] & ~blocked):
            path.append(x)
            yield from extend(path, blocked | closed[last])
            path.pop()

    for v in range(g.order):
        yield from extend([v], 1 << v)


def _independent_subset(adj, cand: int, size: int, chosen: int = 0) -> int | None:
    if size == 0:
        return chosen
    if popcount(cand) < size:
        return None
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        hit = _independent_subset(adj, cand & ~adj[v], size - 1, chosen | low)
        if hit is not None:
            return hit
        if popcount(cand) < size:
            return None
    return None


class BistarHit(NamedTuple):
    witness: int
    path: tuple[int, ...]
    first_leaves: int
    last_leaves: int


def contains_bistar_variant(g: Graph, n: int, p: int) -> BistarHit | None:
    """Induced member of the bistar-variant family with ``n`` leaves per center and path ``P_p``.

    Looks for an induced path x1..xp and independent sets A, B of size ``n``
    with A attached to x1 only and B attached to xp only, within the path;
    edges between A and B are unrestricted.
    """
    if n < 1 or p < 2:
        raise GraphError("bistar variants need n >= 1 and p >= 2")
    if g.order < 2 * n + p:
        return None
    adj = g.adj
    for path in induced_paths(g, p):
        pmask = sum(1 << x for x in path)
        not_first = 0
        for x in path[1:]:
            not_first |= adj[x]
        cand_a = adj[path[0]] & ~pmask & ~not_first
        if popcount(cand_a) < n:
            continue
        not_last = 0
        for x in path[:-1]:
            not_last |= adj[x]
        cand_b = adj[path[-1]] & ~pmask & ~not_last
        if popcount(cand_b) < n:
            continue
        a = _independent_subset(adj, cand_a, n)
        if a is None:
            continue
        b = _independent_subset(adj, cand_b, n)
        if b is None:
            continue
        return BistarHit(pmask | a | b, path, a, b)
    return None


def longest_induced_path(g: Graph) -> int:
    """Largest ``k`` with an induced ``P_k``."""
    if g.order == 0:
        raise GraphError("longest induced path of the null graph is undefined")
    adj, closed = g.adj, g.closed
    best = 1

    def extend(last: int, length: int, blocked: int) -> None:
        nonlocal best
        if length > best:
            best = length
        if best == g.order:
            return
        for x in members(adj[last] & ~blocked):
            extend(x, length + 1, blocked | closed[last])

    for v in range(g.order):
        extend(v, 1, 1 << v)
        if best == g.order:
            break
    return best


def find_member(g: Graph, family: Iterable[Graph]) -> Graph | None:
    for h in family:
        if contains_induced(g, h) is not None:
            return h
    return None
