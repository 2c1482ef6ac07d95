import os
from collections import Counter
from itertools import combinations

import pytest

from conftest import FIXTURES
from srsg.catalog import build, build_underlying
from srsg.core import negation, sign_with, ugraph_from_edges
from srsg.errors import DegreeMismatch, DisconnectedInput
from srsg.iso import canonical_form
from srsg.regularity import SrsgClass, SrsgParams, extract_params
from srsg.search import (
    SearchConfig,
    enumerate_negative_subgraphs,
    search_catalog,
    search_srsg,
)
from srsg.sgio import read_graph6_file


def complete_ugraph(n):
    return ugraph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_kfactor_counts_small():
    assert sum(1 for _ in enumerate_negative_subgraphs(complete_ugraph(4), 1)) == 3
    assert sum(1 for _ in enumerate_negative_subgraphs(build_underlying("K66"), 1)) == 720
    assert sum(1 for _ in enumerate_negative_subgraphs(complete_ugraph(6), 2)) == 70
    # 2-factors of K4 and K5 are exactly the Hamiltonian cycles: 3 and 12
    assert sum(1 for _ in enumerate_negative_subgraphs(complete_ugraph(4), 2)) == 3
    assert sum(1 for _ in enumerate_negative_subgraphs(complete_ugraph(5), 2)) == 12
    # k = 0 and k = r are the two trivial spanning subgraphs
    assert list(enumerate_negative_subgraphs(complete_ugraph(4), 0)) == [()]
    assert sum(1 for _ in enumerate_negative_subgraphs(complete_ugraph(4), 3)) == 1


def test_kfactor_count_g8_regression():
    # frozen constant, cross-checked once against a full combinations scan
    assert sum(1 for _ in enumerate_negative_subgraphs(build_underlying("G8"), 3)) == 2648


def test_kfactor_subsets_are_k_regular_and_unique():
    g8 = build_underlying("G8")
    seen = set()
    for sub in enumerate_negative_subgraphs(g8, 2):
        assert sub not in seen
        seen.add(sub)
        deg = Counter(x for e in sub for x in e)
        assert all(deg[v] == 2 for v in range(8))


def test_kfactor_requires_regular_host():
    path = ugraph_from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(DegreeMismatch):
        list(enumerate_negative_subgraphs(path, 1))
    with pytest.raises(DegreeMismatch):
        list(enumerate_negative_subgraphs(complete_ugraph(4), 9))


def brute_scan(g, rho):
    """Independent oracle: scan negative edge subsets of the feasible size."""
    edges = g.edges()
    m = len(edges)
    r = g.degree(0)
    if (r - rho) % 2 or not 0 <= (r - rho) // 2 <= r:
        return []
    k = (r - rho) // 2
    size = k * g.n // 2
    if k * g.n % 2:
        return []
    hits = []
    for sub in combinations(range(m), size):
        deg = [0] * g.n
        ok = True
        for e in sub:
            u, v = edges[e]
            deg[u] += 1
            deg[v] += 1
            if deg[u] > k or deg[v] > k:
                ok = False
                break
        if not ok or any(d != k for d in deg):
            continue
        sg = sign_with(g, [edges[e] for e in sub])
        if extract_params(sg) is not None:
            hits.append(sg)
    return hits


def test_search_g8_rho0_finds_both_signs():
    rep = search_srsg(build_underlying("G8"), SearchConfig(rho=0))
    assert rep.exhaustive
    assert len(rep.hits) == 2
    keys = {h.canonical for h in rep.hits}
    s48 = build("S4_8").graph
    assert keys == {canonical_form(s48), canonical_form(negation(s48))}
    assert {h.params.as_tuple() for h in rep.hits} == {
        (8, 6, 4, -4, -6), (8, 6, -4, 4, -6),
    }


def test_search_dedupe_modes():
    g8 = build_underlying("G8")
    none = search_srsg(g8, SearchConfig(rho=0, dedupe="none"))
    iso = search_srsg(g8, SearchConfig(rho=0, dedupe="iso"))
    isoneg = search_srsg(g8, SearchConfig(rho=0, dedupe="iso-neg"))
    assert len(none.hits) == none.raw_count >= len(iso.hits) == 2
    assert len(isoneg.hits) == 1
    with pytest.raises(ValueError):
        search_srsg(g8, SearchConfig(rho=0, dedupe="bogus"))


def test_search_k66_rho4():
    rep = search_srsg(build_underlying("K66"), SearchConfig(rho=4))
    assert rep.raw_count == 720  # every matching signing works here
    assert len(rep.hits) == 1
    assert rep.hits[0].canonical == canonical_form(build("S1_12").graph)


def test_search_filter_restricts_hits():
    g8 = build_underlying("G8")
    rep = search_srsg(g8, SearchConfig(rho=2, param_filter=(SrsgParams(8, 6, 0, 0, -2),)))
    assert len(rep.hits) == 1
    assert rep.hits[0].params == SrsgParams(8, 6, 0, 0, -2)
    rep = search_srsg(g8, SearchConfig(rho=2, param_filter=(SrsgParams(9, 6, 0, 0, -2),)))
    assert not rep.hits and "filter" in rep.note


def test_search_vacuous_parity():
    rep = search_srsg(build_underlying("G8"), SearchConfig(rho=1))
    assert not rep.hits and rep.exhaustive and "vacuous" in rep.note


def test_search_k0_reports_homogeneous_hit():
    # rho = r means an empty negative subgraph: the all-positive signing of a
    # strongly regular host is a hit, reported under the homogeneous class
    gq = build_underlying("GQ22")
    rep = search_srsg(gq, SearchConfig(rho=6))
    assert rep.raw_count == 1
    assert len(rep.hits) == 1
    h = rep.hits[0]
    assert h.cls is SrsgClass.HOMOGENEOUS
    assert h.params == SrsgParams(15, 6, 1, None, 3)
    # a non-strongly-regular host has no hit at all
    g9 = build_underlying("G9")
    assert search_srsg(g9, SearchConfig(rho=6)).raw_count == 0


def test_search_trivial_hosts_with_jobs():
    # single-vertex and tiny hosts behave identically for any worker count
    one = ugraph_from_edges(1, [])
    a = search_srsg(one, SearchConfig(rho=0))
    b = search_srsg(one, SearchConfig(rho=0, jobs=2))
    assert a.raw_count == b.raw_count == 0  # edgeless graphs are never SRSGs
    k2 = ugraph_from_edges(2, [(0, 1)])
    a = search_srsg(k2, SearchConfig(rho=-1))
    b = search_srsg(k2, SearchConfig(rho=-1, jobs=2))
    assert a.raw_count == b.raw_count  # all-negative K2 is homogeneous complete
    assert a.raw_count == 0


def test_search_errors():
    path = ugraph_from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(DegreeMismatch):
        search_srsg(path, SearchConfig(rho=0))
    two_k3 = ugraph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(DisconnectedInput):
        search_srsg(two_k3, SearchConfig(rho=0))
    rep = search_srsg(two_k3, SearchConfig(rho=0, require_connected=False))
    assert rep.exhaustive


def test_budget_flags_non_exhaustive():
    rep = search_srsg(build_underlying("G8"), SearchConfig(rho=0, node_budget=10))
    assert not rep.exhaustive
    assert rep.stats.nodes >= 10


def test_pair_prune_off_matches_default():
    g8 = build_underlying("G8")
    for rho in (0, 2):
        fast = search_srsg(g8, SearchConfig(rho=rho))
        slow = search_srsg(g8, SearchConfig(rho=rho, pair_prune=False))
        assert [h.canonical for h in fast.hits] == [h.canonical for h in slow.hits]
        assert fast.raw_count == slow.raw_count


def test_search_matches_brute_scan_on_g8():
    g8 = build_underlying("G8")
    for rho in (0, 2, 4):
        rep = search_srsg(g8, SearchConfig(rho=rho, dedupe="none"))
        oracle = brute_scan(g8, rho)
        assert sorted((h.graph.pos, h.graph.neg) for h in rep.hits) == sorted(
            (g.pos, g.neg) for g in oracle
        )


def test_determinism_and_jobs():
    g8 = build_underlying("G8")
    a = search_srsg(g8, SearchConfig(rho=2))
    b = search_srsg(g8, SearchConfig(rho=2))
    assert [h.canonical for h in a.hits] == [h.canonical for h in b.hits]
    assert a.stats.nodes == b.stats.nodes
    par = search_srsg(g8, SearchConfig(rho=2, jobs=2))
    assert [h.canonical for h in par.hits] == [h.canonical for h in a.hits]
    assert par.stats.leaves == a.stats.leaves
    assert par.raw_count == a.raw_count


def test_search_catalog_aggregates_and_jobs():
    graphs = [(f"o9[{i}]", g) for i, g in enumerate(
        read_graph6_file(os.path.join(FIXTURES, "6reg_order9.g6")))]
    rep1 = search_catalog(graphs, SearchConfig(rho=2))
    assert len(rep1.hits) == 2
    assert len(rep1.per_graph) == 4
    rep2 = search_catalog(graphs, SearchConfig(rho=2, jobs=2))
    assert [h.canonical for h in rep2.hits] == [h.canonical for h in rep1.hits]


def test_dedupe_soundness_pairwise():
    from srsg.iso import are_isomorphic

    rep = search_srsg(build_underlying("G8"), SearchConfig(rho=2))
    keys = [h.canonical for h in rep.hits]
    assert len(set(keys)) == len(keys)
    for i in range(len(rep.hits)):
        for j in range(i + 1, len(rep.hits)):
            assert are_isomorphic(rep.hits[i].graph, rep.hits[j].graph) == (False, None)


def test_hits_satisfy_all_invariants():
    from srsg.regularity import eq3_holds, neg_walk_parity_ok, verify_identity_eq2

    rep = search_srsg(build_underlying("G8"), SearchConfig(rho=2))
    for h in rep.hits:
        assert h.graph.net_degrees() == [2] * 8
        assert verify_identity_eq2(h.graph, h.params)
        assert eq3_holds(h.params, 2)
        if h.cls in (SrsgClass.C1, SrsgClass.C4, SrsgClass.C5) and not h.graph.is_complete():
            assert neg_walk_parity_ok(h.graph)[0]


def test_order10_c2_example_regression():
    """The order-10 sweep at net-degree 2 finds one verified class: a C2
    signing of the triangular graph T(5) (Petersen complement) with
    parameters (10,6,-1,1,0) whose squared sign matrix satisfies
    A^2 + A - 6I = 0 exactly.  Verified independently by brute-force
    arithmetic; kept as a regression pin."""
    graphs = read_graph6_file(os.path.join(FIXTURES, "6reg_order10.g6"))
    rep = search_catalog(
        [(f"o10[{i}]", g) for i, g in enumerate(graphs)], SearchConfig(rho=2)
    )
    assert len(rep.hits) == 1
    h = rep.hits[0]
    assert h.params == SrsgParams(10, 6, -1, 1, 0)
    assert h.cls is SrsgClass.C2
    from srsg.regularity import quadratic_check

    assert quadratic_check(h.graph, 1, -6)
    # underlying graph is T(5): complement is 3-regular with no triangles
    und = h.graph.underlying()
    comp_edges = [
        (u, v)
        for u in range(10)
        for v in range(u + 1, 10)
        if not und.adjacent(u, v)
    ]
    comp = ugraph_from_edges(10, comp_edges)
    assert comp.degrees() == [3] * 10
    assert all(
        not (comp.nbr[u] & comp.nbr[v]).bit_count() for u, v in comp.edges()
    )
