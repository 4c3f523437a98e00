from __future__ import annotations

import itertools
import warnings

import networkx as nx
import pytest

from regchi.canon import is_isomorphic, is_vertex_transitive
from regchi.cayley import (
    CayleyError,
    ConnectionSet,
    GroupSpec,
    cayley_graph,
    lemma1_connection_set,
    parse_connection_set,
    verify_lemma1,
)
from regchi.constructions import antihole, turan
from regchi.graph import complete, cycle, is_connected, is_regular

from oracles import to_nx


def test_group_arithmetic():
    g = GroupSpec((2, 3))
    assert g.order == 6
    assert g.identity == (0, 0)
    assert g.elements()[:3] == [(0, 0), (0, 1), (0, 2)]
    assert g.add((1, 2), (1, 2)) == (0, 1)
    assert g.inverse((1, 1)) == (1, 2)
    assert [g.index(x) for x in g.elements()] == list(range(6))
    with pytest.raises(CayleyError):
        GroupSpec((0,))


def test_cycle_as_cayley_graph():
    z5 = GroupSpec((5,))
    g = cayley_graph(z5, ConnectionSet.of(z5, [1, 4]))
    assert is_isomorphic(g, cycle(5))
    assert cayley_graph(z5, parse_connection_set(z5, "1,4")) == g


def test_lemma1_example():
    g2 = GroupSpec((2, 3))
    x = parse_connection_set(g2, "(0,1);(0,2);(1,1);(1,2)")
    assert x == lemma1_connection_set(2, 3)
    assert len(x.elements) == 4
    assert is_isomorphic(cayley_graph(g2, x), turan(6, 3))
    x12 = lemma1_connection_set(1, 2)
    assert x12.elements == frozenset({(0, 1)})
    assert is_isomorphic(cayley_graph(x12.group, x12), complete(2))
    x34 = lemma1_connection_set(3, 4)
    assert len(x34.elements) == 9
    assert is_isomorphic(cayley_graph(x34.group, x34), turan(12, 4))


def test_validation_errors():
    z4 = GroupSpec((4,))
    with pytest.raises(CayleyError, match="identity"):
        cayley_graph(z4, ConnectionSet.of(z4, [0]))
    with pytest.raises(CayleyError, match="inverses"):
        cayley_graph(z4, ConnectionSet.of(z4, [1]))
    with pytest.raises(CayleyError):
        lemma1_connection_set(2, 1)
    with pytest.raises(CayleyError):
        verify_lemma1(5, 5)


def test_non_generating_set():
    z6 = GroupSpec((6,))
    x = ConnectionSet.of(z6, [2, 4])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = cayley_graph(z6, x)
    assert caught and not is_connected(g)
    with pytest.raises(CayleyError):
        cayley_graph(z6, x, require_generating=True)


def test_verify_lemma1_grid():
    for a in range(1, 5):
        for k in range(2, 6):
            if a * k <= 20:
                assert verify_lemma1(a, k)


def test_circulants_match_networkx_and_are_vertex_transitive():
    for n in range(5, 12):
        zn = GroupSpec((n,))
        for size in (1, 2):
            for gens in itertools.combinations(range(1, n // 2 + 1), size):
                elems = sorted({s % n for s in gens} | {(-s) % n for s in gens})
                g = cayley_graph(zn, ConnectionSet.of(zn, elems), require_generating=False) \
                    if _generates(n, gens) else None
                if g is None:
                    continue
                assert nx.is_isomorphic(to_nx(g), nx.circulant_graph(n, list(gens)))
                assert is_regular(g) == len(elems)
                if n <= 10:
                    assert is_vertex_transitive(g)


def _generates(n: int, gens) -> bool:
    from math import gcd

    g = n
    for s in gens:
        g = gcd(g, s)
    return g == 1


def test_antihole_is_circulant():
    n = 9
    zn = GroupSpec((n,))
    x = ConnectionSet.of(zn, range(2, n - 1))
    assert is_isomorphic(cayley_graph(zn, x), antihole(n))
