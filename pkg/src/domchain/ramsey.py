"""Classical and bipartite Ramsey searches and the bistar reduction check."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .corpus import labeled_graphs
from .families import bistar, bistar_variant, complete_bipartite, generate
from .graph import Graph, GraphError, complement, emit_graph6, popcount
from .hfree import contains_induced
from .parallel import pmap

__all__ = [
    "EXHAUSTIVE_ORDER_CAP",
    "EmpiricalBound",
    "LemmaReport",
    "has_clique",
    "ramsey_witness_search",
    "has_mono_block",
    "find_block_free_pattern",
    "bipartite_ramsey_search",
    "pattern_to_rows",
    "rows_to_pattern",
    "verify_lemma_bistar_reduction",
]

EXHAUSTIVE_ORDER_CAP = 6


@dataclass
class EmpiricalBound:
    """Observed value of an existential constant.

    ``exact`` is set only when the search space below the decision point was
    exhausted; otherwise ``observed`` is a lower bound.
    """

    symbol: str
    params: dict
    observed: int
    exact: bool
    counterexamples: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "params": dict(self.params),
            "observed": self.observed,
            "exact": self.exact,
            "counterexamples": {str(k): v for k, v in self.counterexamples.items()},
            "note": self.note,
        }


def has_clique(g: Graph, m: int) -> int | None:
    """Mask of some ``m``-clique of ``g``, or ``None``."""
    if m == 0:
        return 0
    adj = g.adj

    def rec(chosen: int, cand: int, need: int) -> int | None:
        if need == 0:
            return chosen
        while cand and popcount(cand) >= need:
            low = cand & -cand
            cand ^= low
            hit = rec(chosen | low, cand & adj[low.bit_length() - 1], need - 1)
            if hit is not None:
                return hit
        return None

    return rec(0, g.full, m)


def _lacks_both(g: Graph, m: int, n: int) -> bool:
    return has_clique(g, m) is None and has_clique(complement(g), n) is None


def _random_graph(order: int, rng: random.Random) -> Graph:
    adj = [0] * order
    for u, v in combinations(range(order), 2):
        if rng.random() < 0.5:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(order, adj)


def ramsey_witness_search(
    m: int,
    n: int,
    order_cap: int,
    exhaustive_cap: int = EXHAUSTIVE_ORDER_CAP,
    samples: int = 20000,
    seed: int = 0,
) -> EmpiricalBound:
    """Smallest order ``N <= order_cap`` at which every graph holds a ``K_m`` or an ``E_n``.

    Orders up to ``exhaustive_cap`` are decided over all labeled graphs; above it
    only random sampling runs, which can find counterexamples but never decide.
    """
    if m < 1 or n < 1:
        raise GraphError("Ramsey parameters must be positive")
    found: dict[int, str] = {}
    rng = random.Random(seed)
    for order in range(1, order_cap + 1):
        if order <= exhaustive_cap:
            ce = next((g for g in labeled_graphs(order) if _lacks_both(g, m, n)), None)
            if ce is None:
                return EmpiricalBound("R", {"m": m, "n": n}, order, True, found)
        else:
            ce = None
            for _ in range(samples):
                g = _random_graph(order, rng)
                if _lacks_both(g, m, n):
                    ce = g
                    break
            if ce is None:
                return EmpiricalBound(
                    "R", {"m": m, "n": n}, order, False, found,
                    f"no counterexample among {samples} random graphs of order {order}",
                )
        found[order] = emit_graph6(ce)
    return EmpiricalBound("R", {"m": m, "n": n}, order_cap + 1, False, found, "order cap reached")


# -- bipartite Ramsey --------------------------------------------------------------

def pattern_to_rows(pattern: int, m: int) -> list[int]:
    mask = (1 << m) - 1
    return [(pattern >> (a * m)) & mask for a in range(m)]


def rows_to_pattern(rows: list[int], m: int) -> int:
    return sum(r << (a * m) for a, r in enumerate(rows))


def has_mono_block(rows: list[int], m: int, n: int) -> bool:
    """Does the ``len(rows) x m`` 0/1 matrix hold an ``n x n`` all-ones or all-zeros block?"""
    full = (1 << m) - 1
    for sub in combinations(rows, n):
        ones, zeros = full, full
        for r in sub:
            ones &= r
            zeros &= ~r
        if popcount(ones) >= n or popcount(zeros) >= n:
            return True
    return False


def find_block_free_pattern(m: int, n: int) -> list[int] | None:
    """An ``m x m`` 0/1 matrix without a monochromatic ``n x n`` block, or ``None``.

    Rows are chosen in non-decreasing order (row order never matters for a
    block), and a prefix is abandoned as soon as its newest row completes a
    block, so ``None`` certifies that every matrix has one.
    """
    full = (1 << m) - 1
    rows: list[int] = []

    def closes_block(r: int) -> bool:
        for sub in combinations(rows, n - 1):
            ones, zeros = r, full & ~r
            for s in sub:
                ones &= s
                zeros &= ~s
            if popcount(ones) >= n or popcount(zeros) >= n:
                return True
        return False

    def rec(lo: int) -> bool:
        if len(rows) == m:
            return True
        for r in range(lo, full + 1):
            if closes_block(r):
                continue
            rows.append(r)
            if rec(r):
                return True
            rows.pop()
        return False

    return list(rows) if rec(0) else None


def bipartite_ramsey_search(n: int, side_cap: int) -> EmpiricalBound:
    """Smallest side size ``m`` forcing an ``n x n`` complete or empty cross block."""
    if n < 1:
        raise GraphError("n must be positive")
    found: dict[int, list[int]] = {}
    for m in range(1, side_cap + 1):
        if m < n:
            found[m] = [0] * m
            continue
        ce = find_block_free_pattern(m, n)
        if ce is None:
            return EmpiricalBound("BR", {"n": n}, m, True, found)
        found[m] = ce
    return EmpiricalBound("BR", {"n": n}, side_cap + 1, False, found, "side cap reached")


# -- bistar reduction lemma --------------------------------------------------------

FULL_PATTERN_BITS = 16


@dataclass
class LemmaReport:
    n: int
    p: int
    br: int
    mode: str
    checked: int = 0
    complete_bipartite_hits: int = 0
    bistar_hits: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.checked > 0

    def to_dict(self) -> dict:
        return {
            "n": self.n, "p": self.p, "br": self.br, "mode": self.mode,
            "checked": self.checked,
            "complete_bipartite_hits": self.complete_bipartite_hits,
            "bistar_hits": self.bistar_hits,
            "violations": self.violations,
        }


def _lemma_patterns(br: int, mode: str = "auto"):
    if mode not in ("auto", "all", "rows"):
        raise GraphError(f"unknown enumeration mode {mode!r}")
    if mode == "all" or (mode == "auto" and br * br <= FULL_PATTERN_BITS):
        return "all patterns", range(1 << (br * br))
    # permuting the leaves of one center is an isomorphism of the member graphs,
    # so one pattern per multiset of rows covers every member up to isomorphism
    rows = combinations_with_replacement(range(1 << br), br)
    return "row-sorted patterns", (rows_to_pattern(list(r), br) for r in rows)


def _lemma_check(args) -> tuple[int, int, list[str]]:
    n, p, br, patterns = args
    base = generate(bistar(br, p))
    knn = generate(complete_bipartite(n, n))
    bs = generate(bistar(n, p))
    k_hits = b_hits = 0
    bad = []
    for pattern in patterns:
        g = bistar_variant(base, br, p, pattern)
        if contains_induced(g, knn) is not None:
            k_hits += 1
        elif contains_induced(g, bs) is not None:
            b_hits += 1
        else:
            bad.append(emit_graph6(g))
    return k_hits, b_hits, bad


def verify_lemma_bistar_reduction(
    n: int, p: int, br: int | None = None, jobs: int = 1, mode: str = "auto"
) -> LemmaReport:
    """Every bistar variant with ``br`` leaves per side holds an induced ``K_{n,n}`` or ``BS_n^p``.

    ``br`` defaults to the exact bipartite Ramsey value found by search.  With
    ``mode="auto"`` small cases run over all cross patterns and larger ones over
    row-sorted patterns; ``"all"`` and ``"rows"`` force either enumeration.
    """
    if br is None:
        bound = bipartite_ramsey_search(n, 5)
        if not bound.exact:
            raise GraphError(f"BR({n}) is not decidable within the search cap")
        br = bound.observed
    mode, patterns = _lemma_patterns(br, mode)
    report = LemmaReport(n, p, br, mode)
    chunk: list[int] = []
    tasks = []
    for pat in patterns:
        chunk.append(pat)
        if len(chunk) == 4096:
            tasks.append((n, p, br, chunk))
            chunk = []
    if chunk:
        tasks.append((n, p, br, chunk))
    for (k_hits, b_hits, bad), task in zip(pmap(_lemma_check, tasks, jobs), tasks):
        report.checked += len(task[3])
        report.complete_bipartite_hits += k_hits
        report.bistar_hits += b_hits
        report.violations.extend(bad)
    return report
