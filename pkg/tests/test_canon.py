from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regchi.canon import (
    SizeLimitError,
    automorphism_generators,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
    is_vertex_transitive,
)
from regchi.constructions import antihole, prism, turan
from regchi.graph import Graph, complement, complete, cycle, petersen

from oracles import to_nx
from test_graph import graphs


def _shuffle(g: Graph, rnd: random.Random) -> Graph:
    perm = list(range(g.n))
    rnd.shuffle(perm)
    return g.relabel(perm)


def _random_graph(n: int, p: float, rnd: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p])


def test_invariant_under_100_random_relabellings():
    rnd = random.Random(5)
    for g in (petersen(), turan(12, 3), antihole(9), _random_graph(14, 0.4, rnd)):
        base = canonical_form(g)
        for _ in range(25):
            assert canonical_form(_shuffle(g, rnd)) == base


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_canonical_form_property(g, rnd):
    h = _shuffle(g, rnd)
    assert canonical_form(h) == canonical_form(g)
    assert canonical_graph(h) == canonical_graph(g)
    perm = canonical_labeling(g)
    assert sorted(perm) == list(range(g.n))


def test_agrees_with_networkx_on_random_pairs():
    rnd = random.Random(17)
    for _ in range(150):
        n = rnd.randint(4, 9)
        m = rnd.randint(0, n * (n - 1) // 2)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, rnd.sample(pairs, m))
        h = Graph.from_edges(n, rnd.sample(pairs, m)) if rnd.random() < 0.5 else _shuffle(g, rnd)
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_classic_pairs():
    k33 = Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert not is_isomorphic(k33, prism(3))
    assert is_isomorphic(cycle(5), complement(cycle(5)))
    assert is_isomorphic(turan(6, 2), k33)


def test_coloured_forms_distinguish_roots():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    end = canonical_form(g, [0, 1, 1, 1])
    mid = canonical_form(g, [1, 0, 1, 1])
    assert end != mid
    assert end == canonical_form(g, [1, 1, 1, 0])


def test_automorphisms_are_automorphisms():
    for g in (petersen(), turan(9, 3), cycle(8)):
        for gamma in automorphism_generators(g):
            assert g.relabel(gamma) == g


def test_vertex_transitivity():
    assert is_vertex_transitive(petersen())
    assert is_vertex_transitive(antihole(7))
    assert is_vertex_transitive(complete(6))
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert not is_vertex_transitive(star)
    with pytest.raises(SizeLimitError):
        is_vertex_transitive(cycle(20), limit=16)


def test_non_transitive_regular_graphs_match_networkx():
    # cubic graphs on 8 vertices: decide vertex-transitivity through networkx orbits
    from regchi.enumerate import enumerate_regular

    for g in enumerate_regular(8, 3):
        gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(g))
        images = {m[0] for m in gm.isomorphisms_iter()}
        assert is_vertex_transitive(g) == (len(images) == g.n)
