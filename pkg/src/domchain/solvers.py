"""Exact solvers for the domination chain and its saturation variants.

Every solver returns the optimum together with a witness set.  Ties are broken
towards the witness with the smallest mask value: minima scan each size class
in increasing mask order, maxima run a depth-first search that visits sets in
increasing mask order and only accepts strict improvements.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .graph import Graph, GraphError, induced_subgraph, is_connected, members, popcount

__all__ = [
    "PARAMS",
    "MAX_SOLVER_ORDER",
    "WARN_ORDER",
    "SolverError",
    "InvariantViolation",
    "Solution",
    "Saturation",
    "ParameterReport",
    "ksubsets",
    "domination_number",
    "upper_domination",
    "independence_number",
    "independent_domination",
    "lower_irredundance",
    "upper_irredundance",
    "open_irredundance",
    "independence_saturation_at",
    "independence_saturation",
    "irredundance_saturation_at",
    "irredundance_saturation",
    "max_independent_containing",
    "full_report",
    "compute",
]

PARAMS = ("ir", "gamma", "i", "alpha", "Gamma", "IR", "OIR", "IS", "IRS")
MAX_SOLVER_ORDER = 32
WARN_ORDER = 24


class SolverError(GraphError):
    pass


class InvariantViolation(RuntimeError):
    """A computed report breaks an inequality that holds for every graph."""


class Solution(NamedTuple):
    value: int
    witness: int


class Saturation(NamedTuple):
    value: int
    witness: int
    vertex: int


def _check(g: Graph) -> None:
    if g.order == 0:
        raise SolverError("parameters are undefined on the null graph")
    if g.order > MAX_SOLVER_ORDER:
        raise SolverError(f"exact solvers refuse graphs of order {g.order} > {MAX_SOLVER_ORDER}")
    if g.order > WARN_ORDER:
        warnings.warn(f"exact search on {g.order} vertices may take very long", RuntimeWarning, stacklevel=3)


def ksubsets(n: int, k: int):
    """All ``k``-subsets of ``0..n-1`` as masks, in increasing numeric order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


# -- bit-level predicates (no validation; hot paths) ------------------------------

def _cover(closed, s: int) -> int:
    out = 0
    while s:
        low = s & -s
        out |= closed[low.bit_length() - 1]
        s ^= low
    return out


def _twice(closed, s: int) -> int:
    once = twice = 0
    while s:
        low = s & -s
        c = closed[low.bit_length() - 1]
        twice |= once & c
        once |= c
        s ^= low
    return twice


def _irredundant(closed, s: int) -> bool:
    twice = _twice(closed, s)
    t = s
    while t:
        low = t & -t
        if not closed[low.bit_length() - 1] & ~twice:
            return False
        t ^= low
    return True


def _open_irredundant(closed, s: int) -> bool:
    outside = ~_twice(closed, s) & ~s
    t = s
    while t:
        low = t & -t
        if not closed[low.bit_length() - 1] & outside:
            return False
        t ^= low
    return True


def _independent(adj, s: int) -> bool:
    t = s
    while t:
        low = t & -t
        if adj[low.bit_length() - 1] & s:
            return False
        t ^= low
    return True


# -- generic ordered search for hereditary families --------------------------------

def _ordered_max(
    narrow: Callable[[int, int], int],
    start: int,
    cand: int,
    floor: int,
    accept: Callable[[int], bool] | None = None,
) -> Solution | None:
    """Largest accepted set ``S >= start`` of a hereditary family, smallest mask on ties.

    ``narrow(S, C)`` returns the members ``u`` of ``C`` with ``S + u`` still in
    the family.  ``cand`` must already be narrowed for ``start``.  Only sets of
    size at least ``floor`` are reported.
    """
    best_size = floor - 1
    best = -1

    def rec(s: int, size: int, c: int) -> None:
        nonlocal best_size, best
        if size + popcount(c) <= best_size:
            return
        if not c:
            if size > best_size and (accept is None or accept(s)):
                best_size, best = size, s
            return
        top = 1 << (c.bit_length() - 1)
        rest = c ^ top
        rec(s, size, rest)
        s2 = s | top
        rec(s2, size + 1, narrow(s2, rest))

    rec(start, popcount(start), cand)
    if best < 0:
        return None
    return Solution(best_size, best)


def _narrow_independent(adj):
    def narrow(s: int, c: int) -> int:
        t = s
        while t:
            low = t & -t
            c &= ~adj[low.bit_length() - 1]
            t ^= low
        return c & ~s
    return narrow


def _narrow_by(pred, closed):
    def narrow(s: int, c: int) -> int:
        out = 0
        t = c
        while t:
            low = t & -t
            if pred(closed, s | low):
                out |= low
            t ^= low
        return out
    return narrow


# -- independence -------------------------------------------------------------

def _alpha_value(adj, cand: int) -> int:
    """Maximum independent set size inside ``cand``: branch on a max-degree vertex."""
    best = 0

    def rec(c: int, size: int) -> None:
        nonlocal best
        while True:
            if size + popcount(c) <= best:
                return
            if not c:
                best = size
                return
            low_v = hi_v = -1
            low_d, hi_d = 99, -1
            t = c
            while t:
                bit = t & -t
                v = bit.bit_length() - 1
                d = popcount(adj[v] & c)
                if d < low_d:
                    low_v, low_d = v, d
                if d > hi_d:
                    hi_v, hi_d = v, d
                t ^= bit
            if hi_d == 0:
                best = max(best, size + popcount(c))
                return
            if low_d <= 1:
                # a vertex of degree <= 1 belongs to some maximum independent set
                c &= ~(adj[low_v] | (1 << low_v))
                size += 1
                continue
            break
        rec(c & ~(adj[hi_v] | (1 << hi_v)), size + 1)
        rec(c & ~(1 << hi_v), size)

    rec(cand, 0)
    return best


def independence_number(g: Graph) -> Solution:
    _check(g)
    value = _alpha_value(g.adj, g.full)
    narrow = _narrow_independent(g.adj)
    sol = _ordered_max(narrow, 0, g.full, value)
    assert sol is not None and sol.value == value
    return sol


def max_independent_containing(g: Graph, v: int) -> Solution:
    """Largest independent set through ``v``, found directly by forced search."""
    g.check_vertex(v)
    start = 1 << v
    narrow = _narrow_independent(g.adj)
    sol = _ordered_max(narrow, start, narrow(start, g.full), 1)
    assert sol is not None
    return sol


def independent_domination(g: Graph) -> Solution:
    _check(g)
    adj, closed, full, n = g.adj, g.closed, g.full, g.order
    for k in range(1, n + 1):
        for s in ksubsets(n, k):
            if _independent(adj, s) and _cover(closed, s) == full:
                return Solution(k, s)
    raise AssertionError("unreachable: a maximal independent set always exists")


# -- domination ------------------------------------------------------------------

def domination_number(g: Graph) -> Solution:
    _check(g)
    closed, full, n = g.closed, g.full, g.order
    for k in range(1, n + 1):
        for s in ksubsets(n, k):
            if _cover(closed, s) == full:
                return Solution(k, s)
    raise AssertionError("unreachable: V dominates itself")


def upper_domination(g: Graph) -> Solution:
    """Largest set that is both dominating and irredundant (a minimal dominating set)."""
    _check(g)
    closed, full = g.closed, g.full
    narrow = _narrow_by(_irredundant, closed)
    alpha = _alpha_value(g.adj, full)
    sol = _ordered_max(narrow, 0, narrow(0, full), alpha, lambda s: _cover(closed, s) == full)
    assert sol is not None
    return sol


# -- irredundance -------------------------------------------------------------------

def _is_maximal(closed, s: int, full: int, pred) -> bool:
    t = full & ~s
    while t:
        low = t & -t
        if pred(closed, s | low):
            return False
        t ^= low
    return True


def lower_irredundance(g: Graph) -> Solution:
    """Smallest maximal irredundant set; single-vertex extensions decide maximality."""
    _check(g)
    closed, full, n = g.closed, g.full, g.order
    for k in range(1, n + 1):
        for s in ksubsets(n, k):
            if _irredundant(closed, s) and _is_maximal(closed, s, full, _irredundant):
                return Solution(k, s)
    raise AssertionError("unreachable")


def upper_irredundance(g: Graph) -> Solution:
    _check(g)
    closed, full = g.closed, g.full
    narrow = _narrow_by(_irredundant, closed)
    sol = _ordered_max(narrow, 0, narrow(0, full), _alpha_value(g.adj, full))
    assert sol is not None
    return sol


def open_irredundance(g: Graph) -> Solution:
    """Largest open irredundant set; 0 with an empty witness when only the empty set qualifies."""
    _check(g)
    closed, full = g.closed, g.full
    narrow = _narrow_by(_open_irredundant, closed)
    sol = _ordered_max(narrow, 0, narrow(0, full), 0)
    assert sol is not None
    return sol


# -- saturation --------------------------------------------------------------------

def independence_saturation_at(g: Graph, v: int) -> int:
    """IS(v) = 1 + alpha(G - N[v])."""
    g.check_vertex(v)
    rest = g.full & ~g.closed[v]
    if not rest:
        return 1
    sub = induced_subgraph(g, rest)
    return 1 + _alpha_value(sub.adj, sub.full)


def independence_saturation(g: Graph) -> Saturation:
    _check(g)
    best_v, best = -1, g.order + 1
    for v in g.vertices():
        val = independence_saturation_at(g, v)
        if val < best:
            best_v, best = v, val
    witness = max_independent_containing(g, best_v)
    assert witness.value == best
    return Saturation(best, witness.witness, best_v)


def _irs_at(g: Graph, v: int) -> Solution:
    closed = g.closed
    start = 1 << v
    narrow = _narrow_by(_irredundant, closed)
    sol = _ordered_max(narrow, start, narrow(start, g.full & ~start), 1)
    assert sol is not None
    return sol


def irredundance_saturation_at(g: Graph, v: int) -> int:
    """Largest irredundant set through ``v``."""
    g.check_vertex(v)
    return _irs_at(g, v).value


def irredundance_saturation(g: Graph) -> Saturation:
    _check(g)
    best = None
    for v in g.vertices():
        sol = _irs_at(g, v)
        if best is None or sol.value < best.value:
            best = Saturation(sol.value, sol.witness, v)
    return best


# -- reports ---------------------------------------------------------------------------

SCHEMA_VERSION = 1


@dataclass
class ParameterReport:
    order: int
    connected: bool
    values: dict[str, int]
    witnesses: dict[str, int]
    is_vertex: int = -1
    irs_vertex: int = -1
    extra: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> int:
        return self.values[name]

    def check_invariants(self) -> None:
        v = self.values
        ir, gamma, i, alpha, Gamma, IR = (v[k] for k in ("ir", "gamma", "i", "alpha", "Gamma", "IR"))
        checks = [
            (ir <= gamma <= i <= alpha <= Gamma <= IR, "domination chain"),
            (gamma <= 2 * ir - 1, "gamma <= 2 ir - 1"),
            (i <= v["IS"] <= alpha, "i <= IS <= alpha"),
            (ir <= v["IRS"] <= IR, "ir <= IRS <= IR"),
            (v["IS"] <= v["IRS"], "IS <= IRS"),
            (v["OIR"] <= IR, "OIR <= IR"),
        ]
        for ok, name in checks:
            if not ok:
                raise InvariantViolation(f"{name} violated: {v}")

    def to_dict(self, params=PARAMS) -> dict:
        out = {"schema": SCHEMA_VERSION, "order": self.order, "connected": self.connected}
        for p in params:
            out[p] = self.values[p]
        out["witnesses"] = {p: members(self.witnesses[p]) for p in params}
        out.update(self.extra)
        return out

    def csv_row(self, params=PARAMS) -> list:
        return [self.order, int(self.connected)] + [self.values[p] for p in params]


def csv_header(params=PARAMS) -> list[str]:
    return ["order", "connected", *params]


_SOLVERS = {
    "ir": lower_irredundance,
    "gamma": domination_number,
    "i": independent_domination,
    "alpha": independence_number,
    "Gamma": upper_domination,
    "IR": upper_irredundance,
    "OIR": open_irredundance,
    "IS": independence_saturation,
    "IRS": irredundance_saturation,
}


def compute(g: Graph, param: str) -> int:
    """Value of a single parameter by name."""
    try:
        solver = _SOLVERS[param]
    except KeyError:
        raise SolverError(f"unknown parameter {param!r}; expected one of {', '.join(PARAMS)}") from None
    return solver(g).value


def full_report(g: Graph, params=PARAMS, check: bool = True) -> ParameterReport:
    """All requested parameters with witnesses.

    With ``check`` the full parameter set is checked against the known inequalities.
    """
    _check(g)
    unknown = set(params) - set(PARAMS)
    if unknown:
        raise SolverError(f"unknown parameter(s) {sorted(unknown)}")
    values, witnesses = {}, {}
    is_vertex = irs_vertex = -1
    for p in params:
        sol = _SOLVERS[p](g)
        values[p], witnesses[p] = sol.value, sol.witness
        if p == "IS":
            is_vertex = sol.vertex
        elif p == "IRS":
            irs_vertex = sol.vertex
    report = ParameterReport(g.order, is_connected(g), values, witnesses, is_vertex, irs_vertex)
    if check and set(params) == set(PARAMS):
        report.check_invariants()
    return report
