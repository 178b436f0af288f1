import pytest

from domchain.audits import (
    ScanResult, bound_profile, chain_audit, konig_audit, lozin_q_profile, profile_sanity, saturation_audit,
    family_instances, zverovich_audit,
)
from domchain.corpus import atlas, connected, labeled_graphs_upto
from domchain.families import clique_pendant, complete, complete_bipartite, cycle, empty, generate, path, star_pendant
from domchain.graph import BipartiteView, NotBipartiteError, bipartite_matching_number
from domchain.hfree import ForbiddenFamily
from domchain.solvers import compute, domination_number, independent_domination

G = generate


def test_chain_and_saturation_small():
    assert chain_audit(labeled_graphs_upto(4)).ok
    rep = saturation_audit(labeled_graphs_upto(4))
    assert rep.ok and rep.checked == 1 + 2 + 8 + 64


def test_audit_reports_violation(monkeypatch):
    import domchain.audits as audits
    from domchain.solvers import ParameterReport, PARAMS

    def fake(g, params=PARAMS, check=True):
        return ParameterReport(g.order, True, {p: (3 if p == "gamma" else 1) for p in params}, {})

    monkeypatch.setattr(audits, "full_report", fake)
    rep = chain_audit([G(path(2))])
    assert not rep.ok and "A_" in rep.violations[0]


@pytest.mark.parametrize("spec, alpha, nu", [
    (complete_bipartite(3, 3), 3, 3),
    (empty(6), 6, 0),
    (path(5), 3, 2),
])
def test_konig_examples(spec, alpha, nu):
    g = G(spec)
    assert compute(g, "alpha") == alpha
    assert bipartite_matching_number(BipartiteView.from_graph(g)) == nu
    assert konig_audit([g]).ok


def test_konig_rejects_non_bipartite():
    with pytest.raises(NotBipartiteError):
        konig_audit([G(cycle(5))])
    assert konig_audit([G(cycle(5))], skip_non_bipartite=True).checked == 0


def test_zverovich_examples():
    p7 = G(path(7))
    assert independent_domination(p7).value <= 2 * domination_number(p7).value - 1
    for k in (3, 4, 5):
        assert zverovich_audit([G(complete(1))], k).ok
    with pytest.raises(ValueError):
        zverovich_audit([], 2)


def test_zverovich_k3_forces_equality():
    rep = zverovich_audit(list(connected(atlas(6))), 3)
    assert rep.ok and rep.applicable > 0
    for row in rep.details["profile"].values():
        assert row["max_i"] <= row["bound"]


def test_lozin_profile():
    bip = [g for g in atlas(6) if _bipartite(g)]
    q1 = lozin_q_profile(1, bip)
    assert q1.observed == 1 and not q1.exact
    q2 = lozin_q_profile(2, bip)
    assert q2.observed >= 2
    empty_run = lozin_q_profile(3, [])
    assert empty_run.observed == 1 and not empty_run.exact


def _bipartite(g):
    try:
        BipartiteView.from_graph(g)
        return True
    except NotBipartiteError:
        return False


def test_bound_profile_flat_example():
    fam = ForbiddenFamily((star_pendant(2), clique_pendant(2), path(4)))
    res = bound_profile(atlas(7), fam, "gamma")
    assert res.is_flat()
    assert all(o in res.counts for o in res.maxima)


def test_bound_profile_grows_on_paths():
    res = bound_profile([G(path(n)) for n in range(1, 10)], ForbiddenFamily((complete(3),)), "alpha")
    assert [res.maxima[n] for n in range(1, 10)] == [(n + 1) // 2 for n in range(1, 10)]
    assert not res.is_flat()


def test_bound_profile_monotone_in_corpus():
    fam = ForbiddenFamily((complete(3),))
    corpus = atlas(6)
    small = bound_profile(corpus[:100], fam, "IR")
    big = bound_profile(corpus, fam, "IR")
    assert all(big.maxima[o] >= v for o, v in small.maxima.items())


def test_bound_profile_only_counts_free_connected():
    fam = ForbiddenFamily((path(3),))
    res = bound_profile(atlas(5), fam, "alpha")
    # connected P3-free graphs are cliques
    assert res.maxima == {n: 1 for n in range(1, 6)}
    assert res.counts == {n: 1 for n in range(1, 6)}


def test_scan_result_flatness():
    assert ScanResult(None, "x", {1: 1}).is_flat()
    assert ScanResult(None, "x", {1: 1, 2: 2, 3: 2}).is_flat()
    assert not ScanResult(None, "x", {1: 1, 2: 2}).is_flat()


def test_family_instances_shape():
    insts = family_instances(2)
    assert {i.parameter for i in insts} == {"gamma", "ir", "i", "Gamma", "IR", "OIR", "IS", "IRS"}
    for inst in insts:
        for h in inst.family.expand():
            assert h.order >= 1


def test_profile_sanity_small():
    rows = profile_sanity(list(connected(atlas(6))), 2)
    assert all(r["flat"] for r in rows)
    i_row = next(r for r in rows if r["parameter"] == "i")
    grown = {d["dropped"]: d["max"] for d in i_row["drops"] if d["grows"]}
    assert grown.get("K2,2") == 3  # K3,3 appears once K2,2 is allowed
