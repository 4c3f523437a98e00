from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from regchi.chromatic import (
    Coloring,
    Unresolved,
    chromatic_number,
    clique_number,
    greedy_dsatur,
    independence_number,
    invariants,
    is_k_colorable,
    max_clique,
    max_independent_set,
    predicted_chi_cycle_union,
    reed_value,
)
from regchi.constructions import antihole, cycle_union_complement, g_act, turan
from regchi.enumerate import cycle_partitions
from regchi.graph import Graph, complement, complete, cycle, is_clique, is_independent, petersen

from oracles import brute_chi, brute_clique
from test_graph import graphs


def _from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(h.nodes())}
    return Graph.from_edges(len(idx), ((idx[u], idx[v]) for u, v in h.edges()))


def test_spec_examples():
    assert greedy_dsatur(complete(7)).k == 7
    assert greedy_dsatur(cycle(5)).k == 3
    assert greedy_dsatur(turan(8, 4)).k == 4
    assert len(max_clique(complete(6))) == 6
    assert clique_number(antihole(7)) == 3
    assert clique_number(g_act(4, 2, 3)) == 4
    assert is_k_colorable(antihole(7), 3) is None
    col = is_k_colorable(antihole(7), 4)
    assert col is not None and col.is_proper(antihole(7)) and col.k <= 4
    assert is_k_colorable(Graph.empty(5), 1).k == 1
    assert chromatic_number(complete(5)).chi == 5
    assert chromatic_number(cycle_union_complement([5, 5])).chi == 6
    assert chromatic_number(petersen()).chi == 3
    assert independence_number(cycle(7)) == 3
    assert independence_number(complete(6)) == 1
    assert independence_number(turan(10, 5)) == 2


def test_reed_values():
    assert reed_value(complete(5)) == 5
    assert reed_value(petersen()) == 3
    assert reed_value(antihole(7)) == 4


def test_predicted_cycle_union_examples():
    assert predicted_chi_cycle_union([5, 5]) == 6
    assert predicted_chi_cycle_union([3]) == 1
    assert predicted_chi_cycle_union([3, 4, 5]) == 6


def test_against_subset_dp_on_graph_atlas():
    for h in nx.graph_atlas_g()[1:]:
        g = _from_nx(h)
        res = chromatic_number(g)
        edges = list(g.edges())
        assert res.chi == brute_chi(g.n, edges)
        assert len(res.clique) == brute_clique(g.n, edges)
        assert res.coloring.is_proper(g) and res.coloring.k == res.chi


def test_against_subset_dp_on_random_graphs():
    rnd = random.Random(23)
    for _ in range(60):
        n = rnd.randint(8, 12)
        p = rnd.choice([0.3, 0.5, 0.7])
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p])
        assert chromatic_number(g).chi == brute_chi(n, list(g.edges()))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_sandwich_and_certificates(g):
    res = chromatic_number(g)
    assert res.coloring.is_proper(g)
    assert is_clique(g, res.clique)
    assert len(res.clique) <= res.chi <= greedy_dsatur(g).k
    assert res.chi <= g.max_degree + 1 or g.n == 0
    if res.chi > 0 and res.refuted_k is not None:
        assert res.refuted_k == res.chi - 1
        assert is_k_colorable(g, res.chi - 1) is None
    indep = max_independent_set(g)
    assert is_independent(g, indep)
    assert len(indep) == clique_number(complement(g))


def test_reed_bound_holds_on_regular_graphs():
    from regchi.enumerate import enumerate_regular

    for n, r in [(8, 3), (9, 4), (10, 3), (10, 5), (10, 6)]:
        for g in enumerate_regular(n, r):
            assert chromatic_number(g).chi <= reed_value(g)


def test_cycle_union_closed_form_up_to_12():
    checked = 0
    for total in range(3, 13):
        for parts in cycle_partitions(total):
            g = cycle_union_complement(parts)
            assert chromatic_number(g).chi == predicted_chi_cycle_union(parts)
            checked += 1
    assert checked > 20


def test_invariants_report():
    rep = invariants(antihole(7))
    d = rep.to_dict()
    assert d["chi"] == 4 and d["omega"] == 3 and d["alpha"] == 2
    assert d["delta_max"] == 4 and d["reed_value"] == 4 and d["regular"] == 4


def test_coloring_helpers():
    c = Coloring.normalized([5, 2, 5, 9])
    assert c.colors == (0, 1, 0, 2)
    assert c.classes() == [[0, 2], [1], [3]]
    assert not Coloring((0, 0)).is_proper(complete(2))


def test_timeout_flags_unresolved():
    # a hard instance with a tiny budget must raise instead of guessing
    rnd = random.Random(1)
    n = 70
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5])
    with pytest.raises(Unresolved):
        chromatic_number(g, timeout=1e-4)
