"""Verification suites behind ``domchain verify``.

Each suite returns a ``SuiteResult`` whose ``lines`` name every claim checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .audits import chain_audit, konig_audit, profile_sanity, saturation_audit, zverovich_audit
from .corpus import atlas, connected, labeled_graphs_upto
from .families import (
    FamilySpec,
    bistar,
    clique_matching,
    clique_pendant,
    complete,
    complete_bipartite,
    empty,
    fan,
    generate,
    oracle_entry,
    oracle_table,
    path,
    star_pendant,
)
from .graph import parse_graph6
from .hfree import contains_induced
from .ramsey import bipartite_ramsey_search, ramsey_witness_search, verify_lemma_bistar_reduction
from .solvers import compute

__all__ = ["SuiteResult", "SUITES", "oracle_cases", "run_suite"]


@dataclass
class SuiteResult:
    name: str
    ok: bool
    lines: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "lines": self.lines, "data": self.data}


def oracle_cases(ns=range(2, 7), ps=range(2, 6), source: str = "stated") -> list[tuple[FamilySpec, str]]:
    """(family, parameter) pairs covered by oracle entries of the given source."""
    specs: list[FamilySpec] = []
    for n in ns:
        specs += [star_pendant(n), clique_pendant(n), complete_bipartite(n, n), clique_matching(n), fan(n), path(n)]
        specs.append(path(3 * n - 2))
        specs += [bistar(n, p) for p in ps]
    seen, cases = set(), []
    for spec in specs:
        for entry in oracle_table():
            if entry.source != source or entry.kind != spec.kind or not entry.applies(spec.params):
                continue
            key = (spec, entry.param)
            if key not in seen:
                seen.add(key)
                cases.append(key)
    return cases


def suite_oracles(ns=range(2, 7), ps=range(2, 6), **_) -> SuiteResult:
    res = SuiteResult("oracles", True)
    for spec, param in oracle_cases(ns, ps):
        entry = oracle_entry(spec, param)
        want = entry.formula(spec.params)
        got = compute(generate(spec), param)
        ok = got == want
        res.ok &= ok
        res.lines.append(f"{'ok  ' if ok else 'FAIL'} {param}({spec}) = {got}, closed form [{entry.text}] gives {want}")
    return res


def _audit_result(name: str, report) -> SuiteResult:
    res = SuiteResult(name, report.ok, data=report.to_dict())
    res.lines.append(f"{'ok  ' if report.ok else 'FAIL'} {report.name}: {report.checked} graphs, "
                     f"{report.applicable} applicable, {len(report.violations)} violations")
    res.lines += [f"     violation {v}" for v in report.violations[:10]]
    return res


def suite_chain(max_order: int = 6, jobs: int = 1, **_) -> SuiteResult:
    return _audit_result("chain", chain_audit(labeled_graphs_upto(max_order), jobs))


def suite_saturation(max_order: int = 6, jobs: int = 1, **_) -> SuiteResult:
    return _audit_result("saturation", saturation_audit(labeled_graphs_upto(max_order), jobs))


def suite_konig(max_order: int = 7, **_) -> SuiteResult:
    return _audit_result("konig", konig_audit(atlas(max_order), skip_non_bipartite=True))


def suite_zverovich(max_order: int = 7, jobs: int = 1, ks=(3, 4, 5), **_) -> SuiteResult:
    corpus = list(connected(atlas(max_order)))
    res = SuiteResult("zverovich", True)
    for k in ks:
        part = _audit_result("zverovich", zverovich_audit(corpus, k, jobs))
        res.ok &= part.ok
        res.lines += part.lines
        res.data[str(k)] = part.data
    return res


def suite_lemma(ns=(1, 2), ps=(2, 3, 4), jobs: int = 1, **_) -> SuiteResult:
    res = SuiteResult("lemma", True)
    for n in ns:
        for p in ps:
            rep = verify_lemma_bistar_reduction(n, p, jobs=jobs)
            res.ok &= rep.ok
            res.lines.append(f"{'ok  ' if rep.ok else 'FAIL'} n={n} p={p} BR={rep.br}: {rep.checked} {rep.mode}, "
                             f"{len(rep.violations)} violations")
            res.data[f"{n},{p}"] = rep.to_dict()
    return res


def suite_ramsey(**_) -> SuiteResult:
    res = SuiteResult("ramsey", True)
    r33 = ramsey_witness_search(3, 3, 6)
    ce = parse_graph6(r33.counterexamples[5]) if 5 in r33.counterexamples else None
    ce_ok = (
        ce is not None
        and contains_induced(ce, generate(complete(3))) is None
        and contains_induced(ce, generate(empty(3))) is None
    )
    ok = r33.exact and r33.observed == 6 and ce_ok
    res.ok &= ok
    res.lines.append(f"{'ok  ' if ok else 'FAIL'} R(3,3) = {r33.observed} (exact={r33.exact}), "
                     f"order-5 counterexample {r33.counterexamples.get(5)}")
    res.data["R(3,3)"] = r33.to_dict()
    for n in (1, 2):
        br = bipartite_ramsey_search(n, 5)
        ok = br.exact
        res.ok &= ok
        res.lines.append(f"{'ok  ' if ok else 'FAIL'} BR({n}) = {br.observed} (exact={br.exact})")
        res.data[f"BR({n})"] = br.to_dict()
    return res


def suite_profiles(n: int = 2, max_order: int = 7, jobs: int = 1, **_) -> SuiteResult:
    corpus = list(connected(atlas(max_order)))
    rows = profile_sanity(corpus, n, jobs=jobs)
    flat = all(r["flat"] for r in rows)
    grows = any(d["grows"] for r in rows for d in r["drops"])
    res = SuiteResult("profiles", flat and grows, data={"instances": rows})
    for r in rows:
        grown = [d["dropped"] for d in r["drops"] if d["grows"]]
        res.lines.append(f"{'ok  ' if r['flat'] else 'FAIL'} {r['instance']} maxima {r['maxima']}; "
                         f"dropping {grown or 'nothing'} raises the maximum")
    res.lines.append(f"{'ok  ' if grows else 'FAIL'} some single-member drop raises a maximum")
    return res


SUITES = {
    "oracles": suite_oracles,
    "chain": suite_chain,
    "saturation": suite_saturation,
    "konig": suite_konig,
    "lemma": suite_lemma,
    "zverovich": suite_zverovich,
    "ramsey": suite_ramsey,
    "profiles": suite_profiles,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    return SUITES[name](**kwargs)
