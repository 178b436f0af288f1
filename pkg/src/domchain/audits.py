"""Corpus audits: inequality checks, Konig identity, matching profiles and bound profiles."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .families import (
    bistar,
    clique_matching,
    clique_pendant,
    complete_bipartite,
    copies,
    complete,
    fan,
    path,
    star_pendant,
)
from .graph import (
    BipartiteView,
    Graph,
    NotBipartiteError,
    bipartite_matching_number,
    emit_graph6,
    is_connected,
)
from .hfree import ForbiddenFamily, contains_bistar_variant, is_family_free
from .parallel import pmap
from .ramsey import EmpiricalBound
from .solvers import (
    compute,
    domination_number,
    independence_number,
    independence_saturation_at,
    independent_domination,
    max_independent_containing,
    full_report,
)

__all__ = [
    "AuditReport",
    "ScanResult",
    "FamilyInstance",
    "chain_audit",
    "saturation_audit",
    "zverovich_audit",
    "konig_audit",
    "lozin_q_profile",
    "bound_profile",
    "family_instances",
    "profile_sanity",
]

CHAIN = ("ir", "gamma", "i", "alpha", "Gamma", "IR")


@dataclass
class AuditReport:
    name: str
    checked: int = 0
    applicable: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "applicable": self.applicable,
            "violations": self.violations,
            "details": self.details,
        }


def _batched(items: Iterable, size: int):
    batch = []
    for x in items:
        batch.append(x)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def _run(name: str, check, corpus: Iterable[Graph], jobs: int, fail_fast: bool) -> AuditReport:
    report = AuditReport(name)
    for results in pmap(check, _batched(corpus, 512), jobs):
        for applicable, problem in results:
            report.checked += 1
            report.applicable += applicable
            if problem is not None:
                report.violations.append(problem)
        if fail_fast and report.violations:
            break
    return report


# -- chain and saturation inequalities --------------------------------------------------

def _chain_batch(graphs: list[Graph]):
    out = []
    for g in graphs:
        v = full_report(g, CHAIN).values
        ok = v["ir"] <= v["gamma"] <= v["i"] <= v["alpha"] <= v["Gamma"] <= v["IR"]
        ok = ok and v["gamma"] <= 2 * v["ir"] - 1
        out.append((1, None if ok else f"{emit_graph6(g)} {v}"))
    return out


def chain_audit(corpus: Iterable[Graph], jobs: int = 1, fail_fast: bool = True) -> AuditReport:
    """ir <= gamma <= i <= alpha <= Gamma <= IR and gamma <= 2 ir - 1 on every graph."""
    return _run("chain", _chain_batch, corpus, jobs, fail_fast)


def _saturation_batch(graphs: list[Graph]):
    out = []
    for g in graphs:
        v = full_report(g, check=False).values
        problems = []
        if not v["i"] <= v["IS"] <= v["alpha"]:
            problems.append("i <= IS <= alpha")
        if not v["ir"] <= v["IRS"] <= v["IR"]:
            problems.append("ir <= IRS <= IR")
        if not v["IS"] <= v["IRS"]:
            problems.append("IS <= IRS")
        if not v["OIR"] <= v["IR"]:
            problems.append("OIR <= IR")
        for x in g.vertices():
            if independence_saturation_at(g, x) != max_independent_containing(g, x).value:
                problems.append(f"IS({x}) identity")
        out.append((1, f"{emit_graph6(g)} {problems} {v}" if problems else None))
    return out


def saturation_audit(corpus: Iterable[Graph], jobs: int = 1, fail_fast: bool = True) -> AuditReport:
    """i <= IS <= alpha, ir <= IRS <= IR, IS <= IRS, OIR <= IR and IS(v) = 1 + alpha(G - N[v])."""
    return _run("saturation", _saturation_batch, corpus, jobs, fail_fast)


# -- independent domination vs domination on bistar-variant-free graphs -----------------

def _zverovich_batch(args):
    k, graphs = args
    out = []
    for g in graphs:
        if contains_bistar_variant(g, k - 1, 2) is not None:
            out.append((0, None, None))
            continue
        i = independent_domination(g).value
        gamma = domination_number(g).value
        bound = gamma * (k - 2) - (k - 3)
        out.append((1, None if i <= bound else f"{emit_graph6(g)} i={i} gamma={gamma} k={k}", (gamma, i, bound)))
    return out


def zverovich_audit(corpus: Iterable[Graph], k: int, jobs: int = 1, fail_fast: bool = True) -> AuditReport:
    """``i <= gamma (k-2) - (k-3)`` on every graph free of the bistar variants with k-1 leaves.

    ``details`` records, per domination number, the largest ``i`` seen and how
    often the bound was met with equality.
    """
    if k < 3:
        raise ValueError("the inequality needs k >= 3")
    report = AuditReport(f"zverovich k={k}")
    tight: dict[int, dict] = {}
    for results in pmap(_zverovich_batch, ((k, b) for b in _batched(corpus, 256)), jobs):
        for applicable, problem, values in results:
            report.checked += 1
            report.applicable += applicable
            if problem is not None:
                report.violations.append(problem)
            if values is not None:
                gamma, i, bound = values
                row = tight.setdefault(gamma, {"max_i": 0, "bound": bound, "equal": 0})
                row["max_i"] = max(row["max_i"], i)
                row["equal"] += i == bound
        if fail_fast and report.violations:
            break
    report.details = {"k": k, "profile": {str(g): row for g, row in sorted(tight.items())}}
    return report


# -- Konig --------------------------------------------------------------------------------

def konig_audit(corpus: Iterable[Graph], skip_non_bipartite: bool = False) -> AuditReport:
    """alpha(B) + nu(B) = |V(B)| for bipartite graphs.

    Non-bipartite input raises ``NotBipartiteError`` unless ``skip_non_bipartite``.
    """
    report = AuditReport("konig")
    for g in corpus:
        try:
            view = BipartiteView.from_graph(g)
        except NotBipartiteError:
            if skip_non_bipartite:
                continue
            raise
        report.checked += 1
        report.applicable += 1
        alpha = independence_number(g).value
        nu = bipartite_matching_number(view)
        if alpha + nu != g.order:
            report.violations.append(f"{emit_graph6(g)} alpha={alpha} nu={nu}")
    return report


def lozin_q_profile(n: int, corpus: Iterable[Graph]) -> EmpiricalBound:
    """Lower bound on q(n): one more than the largest matching among {nK2, Kn,n}-free bipartite graphs."""
    fam = ForbiddenFamily((copies(n, complete(2)), complete_bipartite(n, n)), f"q({n})")
    best, witness, seen = 0, None, 0
    for g in corpus:
        try:
            view = BipartiteView.from_graph(g)
        except NotBipartiteError:
            continue
        if not is_family_free(g, fam):
            continue
        seen += 1
        nu = bipartite_matching_number(view)
        if witness is None or nu > best:
            best, witness = nu, emit_graph6(g)
    note = f"{seen} free bipartite graphs scanned" if seen else "no qualifying graphs"
    extremal = {best: witness} if witness else {}
    return EmpiricalBound("q", {"n": n}, best + 1, False, extremal, note)


# -- bound profiles ------------------------------------------------------------------------

@dataclass
class ScanResult:
    family: ForbiddenFamily
    parameter: str
    maxima: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    scanned: int = 0

    @property
    def overall_max(self) -> int | None:
        return max(self.maxima.values()) if self.maxima else None

    def flat_from(self) -> int | None:
        """Smallest order from which every observed per-order maximum is the same."""
        orders = sorted(self.maxima)
        if not orders:
            return None
        start = orders[-1]
        for o in reversed(orders):
            if self.maxima[o] != self.maxima[orders[-1]]:
                break
            start = o
        return start

    def is_flat(self) -> bool:
        """Flat when the last value is shared by an earlier order (or the class is a single order)."""
        orders = sorted(self.maxima)
        return len(orders) <= 1 or self.flat_from() < orders[-1]

    def to_dict(self) -> dict:
        return {
            "family": str(self.family),
            "parameter": self.parameter,
            "maxima": {str(k): v for k, v in sorted(self.maxima.items())},
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "witnesses": {str(k): v for k, v in sorted(self.witnesses.items())},
            "scanned": self.scanned,
        }

    def csv_rows(self) -> list[list]:
        return [[str(self.family), self.parameter, o, self.counts[o], self.maxima[o], self.witnesses[o]]
                for o in sorted(self.maxima)]


def _profile_batch(args):
    fam, param, connected_only, graphs = args
    out = []
    for g in graphs:
        if connected_only and not is_connected(g):
            out.append(None)
        elif not is_family_free(g, fam):
            out.append(None)
        else:
            out.append(compute(g, param))
    return out


def bound_profile(
    corpus: Iterable[Graph],
    fam: ForbiddenFamily,
    param: str,
    connected_only: bool = True,
    jobs: int = 1,
) -> ScanResult:
    """Per-order maximum of ``param`` over the (connected) ``fam``-free graphs of a corpus."""
    result = ScanResult(fam, param)
    batches = list(_batched(corpus, 128))
    tasks = [(fam, param, connected_only, b) for b in batches]
    for batch, values in zip(batches, pmap(_profile_batch, tasks, jobs)):
        for g, value in zip(batch, values):
            result.scanned += 1
            if value is None:
                continue
            o = g.order
            result.counts[o] = result.counts.get(o, 0) + 1
            if o not in result.maxima or value > result.maxima[o]:
                result.maxima[o] = value
                result.witnesses[o] = emit_graph6(g)
    return result


@dataclass(frozen=True)
class FamilyInstance:
    label: str
    family: ForbiddenFamily
    parameter: str


def family_instances(n: int = 2, path_len: int | None = None) -> list[FamilyInstance]:
    """The forbidden families of the bounded-parameter characterizations at a fixed ``n``.

    ``path_len`` sets the path member; it defaults to ``max(n, 4)`` because
    ``P_2`` is a single edge and would leave only ``K_1`` connected and free.
    Bistar members use every ``p`` in ``2..max(2, n-3)``.
    """
    L = max(n, 4) if path_len is None else path_len
    sp, cp, pn = star_pendant(n), clique_pendant(n), path(L)
    knn, ck, fn = complete_bipartite(n, n), clique_matching(n), fan(n)
    bs_range = [bistar(n, p) for p in range(2, max(2, n - 3) + 1)]
    base = (sp, cp, pn)
    fams = [
        ("gamma-bounded", base, ("gamma", "ir")),
        ("i-bounded", base + (knn, bistar(n, 2)), ("i",)),
        ("Gamma/IR-bounded", (complete_bipartite(1, n), cp, pn, ck), ("Gamma", "IR")),
        ("OIR-bounded", base + (ck, fn), ("OIR",)),
        ("IS-bounded", base + (knn, *bs_range), ("IS",)),
        ("IRS-bounded", base + (knn, ck, *bs_range), ("IRS",)),
    ]
    out = []
    for label, members, params in fams:
        fam = ForbiddenFamily(members, label)
        out.extend(FamilyInstance(f"{label}:{p}", fam, p) for p in params)
    return out


def profile_sanity(corpus: list[Graph], n: int = 2, path_len: int | None = None, jobs: int = 1) -> list[dict]:
    """For each family instance: its profile, flatness, and the effect of dropping each member."""
    rows = []
    for inst in family_instances(n, path_len):
        scan = bound_profile(corpus, inst.family, inst.parameter, jobs=jobs)
        drops = []
        for idx, member in enumerate(inst.family.members):
            reduced = inst.family.without(idx)
            dropped = bound_profile(corpus, reduced, inst.parameter, jobs=jobs)
            base_max = scan.overall_max or 0
            drops.append({
                "dropped": str(member),
                "max": dropped.overall_max,
                "grows": (dropped.overall_max or 0) > base_max,
                "maxima": dict(sorted(dropped.maxima.items())),
            })
        rows.append({
            "instance": inst.label,
            "family": str(inst.family),
            "parameter": inst.parameter,
            "maxima": dict(sorted(scan.maxima.items())),
            "flat": scan.is_flat(),
            "flat_from": scan.flat_from(),
            "drops": drops,
        })
    return rows
