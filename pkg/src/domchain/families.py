"""Named graph families and their closed-form parameter values.

Vertex layouts are fixed so that generated graphs are reproducible:

* ``StarPendant(n)``  K1,n*: center 0, leaves 1..n, pendant of leaf i at n+i.
* ``CliquePendant(n)`` Kn*: clique 0..n-1, pendant of vertex i at n+i.
* ``CliqueMatching(n)`` CKn: cliques 0..n-1 and n..2n-1, matching i -- n+i.
* ``Bistar(n, p)`` BSn^p: path 0..p-1 (centers 0 and p-1), leaves of center 0
  at p..p+n-1, leaves of center p-1 at p+n..p+2n-1.  ``p == 1`` collapses both
  centers into one vertex.
* ``Fan(n)`` Fn: hub 0 over the matching (1,2), (3,4), ..., (2n-1, 2n).
"""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .graph import Graph, GraphError, disjoint_union, from_edge_list

__all__ = [
    "KINDS",
    "FamilySpec",
    "OracleEntry",
    "generate",
    "parse_spec",
    "oracle_value",
    "oracle_entry",
    "oracle_table",
    "enumerate_bistar_variants",
    "bistar_layout",
    "GRAMMAR",
    "path",
    "cycle",
    "complete",
    "empty",
    "complete_bipartite",
    "star_pendant",
    "clique_pendant",
    "clique_matching",
    "bistar",
    "fan",
]

KINDS = {
    "Path": 1,
    "Cycle": 1,
    "Complete": 1,
    "Empty": 1,
    "CompleteBipartite": 2,
    "StarPendant": 1,
    "CliquePendant": 1,
    "CliqueMatching": 1,
    "Bistar": 2,
    "Fan": 1,
    "DisjointCopies": 1,
}

GRAMMAR = (
    "family grammar: Pn (path), Cn (cycle, n>=3), Kn (complete), En (empty), "
    "Ks,t (complete bipartite), K1,n* (star with pendants), Kn* (clique with pendants), "
    "CKn (two cliques plus a perfect matching), BSn or BSn^p (bistar, default p=2), "
    "Fn (fan), cxSPEC (c disjoint copies, e.g. 3xK2)"
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]
    inner: FamilySpec | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if len(self.params) != KINDS[self.kind]:
            raise GraphError(f"{self.kind} takes {KINDS[self.kind]} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise GraphError(f"{self.kind} parameters must be positive, got {self.params}")
        if self.kind == "Cycle" and self.params[0] < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if self.kind == "Bistar" and self.params[1] < 2:
            raise GraphError("a bistar needs a center path on at least 2 vertices")
        if (self.kind == "DisjointCopies") != (self.inner is not None):
            raise GraphError("DisjointCopies needs exactly one inner spec")

    def __str__(self):
        k, p = self.kind, self.params
        if k == "Path":
            return f"P{p[0]}"
        if k == "Cycle":
            return f"C{p[0]}"
        if k == "Complete":
            return f"K{p[0]}"
        if k == "Empty":
            return f"E{p[0]}"
        if k == "CompleteBipartite":
            return f"K{p[0]},{p[1]}"
        if k == "StarPendant":
            return f"K1,{p[0]}*"
        if k == "CliquePendant":
            return f"K{p[0]}*"
        if k == "CliqueMatching":
            return f"CK{p[0]}"
        if k == "Bistar":
            return f"BS{p[0]}^{p[1]}"
        if k == "Fan":
            return f"F{p[0]}"
        return f"{p[0]}x{self.inner}"

    @property
    def order(self) -> int:
        k, p = self.kind, self.params
        if k in ("Path", "Cycle", "Complete", "Empty"):
            return p[0]
        if k == "CompleteBipartite":
            return p[0] + p[1]
        if k in ("StarPendant", "Fan"):
            return 2 * p[0] + 1
        if k in ("CliquePendant", "CliqueMatching"):
            return 2 * p[0]
        if k == "Bistar":
            return 2 * p[0] + p[1]
        return p[0] * self.inner.order


# -- constructors -------------------------------------------------------------

def path(n: int) -> FamilySpec:
    return FamilySpec("Path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("Cycle", (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("Complete", (n,))


def empty(n: int) -> FamilySpec:
    return FamilySpec("Empty", (n,))


def complete_bipartite(s: int, t: int) -> FamilySpec:
    return FamilySpec("CompleteBipartite", (s, t))


def star_pendant(n: int) -> FamilySpec:
    return FamilySpec("StarPendant", (n,))


def clique_pendant(n: int) -> FamilySpec:
    return FamilySpec("CliquePendant", (n,))


def clique_matching(n: int) -> FamilySpec:
    return FamilySpec("CliqueMatching", (n,))


def bistar(n: int, p: int = 2) -> FamilySpec:
    return FamilySpec("Bistar", (n, p))


def fan(n: int) -> FamilySpec:
    return FamilySpec("Fan", (n,))


def copies(count: int, inner: FamilySpec) -> FamilySpec:
    return FamilySpec("DisjointCopies", (count,), inner)


def _clique_edges(vs) -> list[tuple[int, int]]:
    return list(itertools.combinations(vs, 2))


def bistar_layout(n: int, p: int) -> tuple[list[int], list[int], list[int]]:
    """(path vertices, leaves of the first center, leaves of the last center)."""
    return list(range(p)), list(range(p, p + n)), list(range(p + n, p + 2 * n))


def generate(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "Path":
        n = p[0]
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if k == "Cycle":
        n = p[0]
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if k == "Complete":
        return from_edge_list(p[0], _clique_edges(range(p[0])))
    if k == "Empty":
        return from_edge_list(p[0], [])
    if k == "CompleteBipartite":
        s, t = p
        return from_edge_list(s + t, [(a, s + b) for a in range(s) for b in range(t)])
    if k == "StarPendant":
        n = p[0]
        return from_edge_list(2 * n + 1, [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)])
    if k == "CliquePendant":
        n = p[0]
        return from_edge_list(2 * n, _clique_edges(range(n)) + [(i, n + i) for i in range(n)])
    if k == "CliqueMatching":
        n = p[0]
        edges = _clique_edges(range(n)) + _clique_edges(range(n, 2 * n)) + [(i, n + i) for i in range(n)]
        return from_edge_list(2 * n, edges)
    if k == "Bistar":
        n, plen = p
        spine, left, right = bistar_layout(n, plen)
        edges = [(i, i + 1) for i in range(plen - 1)]
        edges += [(0, a) for a in left] + [(plen - 1, b) for b in right]
        return from_edge_list(2 * n + plen, edges)
    if k == "Fan":
        n = p[0]
        edges = [(0, i) for i in range(1, 2 * n + 1)] + [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
        return from_edge_list(2 * n + 1, edges)
    inner = generate(spec.inner)
    return disjoint_union(*([inner] * p[0]))


_ATOM = re.compile(
    r"""^(?:
        (?P<starp>K1,(?P<starp_n>\d+)\*)
      | (?P<kstar>K(?P<kstar_n>\d+)\*)
      | (?P<kbip>K(?P<kbip_s>\d+),(?P<kbip_t>\d+))
      | (?P<ck>CK(?P<ck_n>\d+))
      | (?P<bs>BS(?P<bs_n>\d+)(?:\^(?P<bs_p>\d+))?)
      | (?P<single>(?P<letter>[PCKEF])(?P<single_n>\d+))
    )$""",
    re.VERBOSE,
)

_SINGLE = {"P": "Path", "C": "Cycle", "K": "Complete", "E": "Empty", "F": "Fan"}


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI family syntax (see ``GRAMMAR``)."""
    s = text.strip()
    m = re.match(r"^(\d+)x(.+)$", s)
    if m:
        return copies(int(m.group(1)), parse_spec(m.group(2)))
    m = _ATOM.match(s)
    if not m:
        raise GraphError(f"cannot parse family {text!r}; {GRAMMAR}")
    if m.group("starp"):
        return star_pendant(int(m.group("starp_n")))
    if m.group("kstar"):
        return clique_pendant(int(m.group("kstar_n")))
    if m.group("kbip"):
        return complete_bipartite(int(m.group("kbip_s")), int(m.group("kbip_t")))
    if m.group("ck"):
        return clique_matching(int(m.group("ck_n")))
    if m.group("bs"):
        return bistar(int(m.group("bs_n")), int(m.group("bs_p") or 2))
    return FamilySpec(_SINGLE[m.group("letter")], (int(m.group("single_n")),))


# -- oracle table ---------------------------------------------------------------

@dataclass(frozen=True)
class OracleEntry:
    kind: str
    param: str
    formula: Callable[[tuple[int, ...]], int | None]
    text: str
    source: str  # "stated" or "derived"
    applies: Callable[[tuple[int, ...]], bool] = lambda params: True


def _ceil3(params):
    return math.ceil(params[0] / 3)


_TABLE: list[OracleEntry] = [
    # closed forms as stated for these families
    OracleEntry("StarPendant", "i", lambda p: p[0], "i(K1,n*) = n", "stated"),
    OracleEntry("CliquePendant", "i", lambda p: p[0], "i(Kn*) = n", "stated"),
    OracleEntry("CompleteBipartite", "i", lambda p: p[0], "i(Kn,n) = n", "stated",
                lambda p: p[0] == p[1]),
    OracleEntry("Bistar", "i", lambda p: p[0] + 1, "i(BSn) = n+1", "stated", lambda p: p[1] == 2),
    OracleEntry("Path", "i", _ceil3, "i(P_{3c-2}) = c", "stated", lambda p: p[0] % 3 == 1),
    OracleEntry("CliqueMatching", "Gamma", lambda p: p[0], "Gamma(CKn) = n", "stated"),
    OracleEntry("StarPendant", "OIR", lambda p: p[0], "OIR(K1,n*) = n", "stated"),
    OracleEntry("CliquePendant", "OIR", lambda p: p[0], "OIR(Kn*) = n", "stated"),
    OracleEntry("CliqueMatching", "OIR", lambda p: p[0], "OIR(CKn) = n", "stated"),
    OracleEntry("Fan", "OIR", lambda p: p[0], "OIR(Fn) = n", "stated"),
    OracleEntry("Path", "OIR", _ceil3, "OIR(Pn) = ceil(n/3)", "stated"),
    OracleEntry("Bistar", "IS", lambda p: p[0] + 1, "IS(BSn^p) = n+1", "stated"),
    OracleEntry("CliqueMatching", "IRS", lambda p: p[0], "IRS(CKn) = n", "stated"),
    # values forced by elementary counting, kept apart from the stated ones
    OracleEntry("Path", "gamma", _ceil3, "gamma(Pn) = ceil(n/3)", "derived"),
    OracleEntry("Path", "i", _ceil3, "i(Pn) = ceil(n/3)", "derived", lambda p: p[0] % 3 != 1),
    OracleEntry("Path", "alpha", lambda p: math.ceil(p[0] / 2), "alpha(Pn) = ceil(n/2)", "derived"),
    OracleEntry("Complete", "alpha", lambda p: 1, "alpha(Kn) = 1", "derived"),
    OracleEntry("Complete", "gamma", lambda p: 1, "gamma(Kn) = 1", "derived"),
    OracleEntry("Complete", "IR", lambda p: 1, "IR(Kn) = 1", "derived"),
    OracleEntry("Empty", "gamma", lambda p: p[0], "gamma(En) = n", "derived"),
    OracleEntry("Empty", "IR", lambda p: p[0], "IR(En) = n", "derived"),
    OracleEntry("CompleteBipartite", "alpha", lambda p: max(p), "alpha(Ks,t) = max(s,t)", "derived"),
    OracleEntry("CliqueMatching", "IR", lambda p: p[0], "IR(CKn) = n", "derived", lambda p: p[0] >= 2),
    OracleEntry("CliqueMatching", "alpha", lambda p: 2 if p[0] >= 2 else 1, "alpha(CKn) = 2 (n>=2)", "derived"),
    OracleEntry("Fan", "gamma", lambda p: 1, "gamma(Fn) = 1", "derived"),
    OracleEntry("Fan", "alpha", lambda p: p[0], "alpha(Fn) = n", "derived"),
    OracleEntry("StarPendant", "gamma", lambda p: p[0], "gamma(K1,n*) = n", "derived"),
    OracleEntry("CliquePendant", "gamma", lambda p: p[0], "gamma(Kn*) = n", "derived"),
    OracleEntry("Bistar", "gamma", lambda p: 2 + math.ceil(max(p[1] - 4, 0) / 3), "gamma(BSn^p) = 2 + ceil(max(p-4,0)/3)",
                "derived", lambda p: p[0] >= 2),
]


def oracle_table() -> list[OracleEntry]:
    return list(_TABLE)


def oracle_entry(spec: FamilySpec, param: str) -> OracleEntry | None:
    """Entry for ``(spec, param)``; stated entries take precedence."""
    for entry in _TABLE:
        if entry.kind == spec.kind and entry.param == param and entry.applies(spec.params):
            return entry
    return None


def oracle_value(spec: FamilySpec, param: str) -> int | None:
    entry = oracle_entry(spec, param)
    return None if entry is None else entry.formula(spec.params)


# -- bistar variants -------------------------------------------------------------

MAX_VARIANT_BITS = 25


def enumerate_bistar_variants(n: int, p: int, max_bits: int = MAX_VARIANT_BITS) -> Iterator[Graph]:
    """Every member of the bistar-variant family: BSn^p plus any set of cross-leaf edges.

    Pattern bit ``a * n + b`` joins leaf ``a`` of the first center to leaf ``b``
    of the last center; members are yielded in increasing pattern order.
    """
    if n * n > max_bits:
        raise GraphError(f"2^{n * n} bistar variants exceed the enumeration cap 2^{max_bits}")
    base = generate(bistar(n, p))
    for pattern in range(1 << (n * n)):
        yield bistar_variant(base, n, p, pattern)


def bistar_variant(base: Graph, n: int, p: int, pattern: int) -> Graph:
    """``base`` (a BSn^p from ``generate``) plus the cross edges encoded in ``pattern``."""
    adj = list(base.adj)
    for a in range(n):
        for b in range(n):
            if pattern >> (a * n + b) & 1:
                u, v = p + a, p + n + b
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(base.order, adj)
