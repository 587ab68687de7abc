import random

import pytest
from hypothesis import given

from conftest import graphs
from splitthick.graph import (Graph, gen_complete, gen_complete_bipartite, gen_cycle, gen_double_k12,
                              gen_hypercube, gen_path, gen_petersen, gen_random, gen_random_tree)


def test_complete_counts():
    assert gen_complete(1).m == 0
    assert gen_complete(5).m == 10
    assert gen_complete(12).m == 66


def test_complete_rejects_empty():
    with pytest.raises(ValueError):
        gen_complete(0)


def test_bipartite_labels_and_counts():
    g = gen_complete_bipartite(7, 8)
    assert (g.n, g.m) == (15, 56)
    assert g.bipartition() == (frozenset(range(7)), frozenset(range(7, 15)))
    with pytest.raises(ValueError):
        gen_complete_bipartite(0, 3)


def test_double_k12_shares_one_vertex():
    g = gen_double_k12()
    assert (g.n, g.m) == (23, 132)
    assert g.degree(0) == 22
    assert sorted(g.degree(v) for v in range(1, 23)) == [11] * 22


def test_small_families():
    assert gen_cycle(5).m == 5
    assert gen_path(4).m == 3
    p = gen_petersen()
    assert (p.n, p.m, p.max_degree()) == (10, 15, 3)
    q = gen_hypercube(4)
    assert (q.n, q.m) == (16, 32)
    assert q.bipartition() is not None


def test_validation():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    assert Graph(3, frozenset({(2, 0)})).edges == frozenset({(0, 2)})


def test_random_generators_are_seeded():
    a = gen_random(9, 0.4, random.Random(5))
    b = gen_random(9, 0.4, random.Random(5))
    assert a == b
    t = gen_random_tree(12, random.Random(1))
    assert t.m == 11 and len(t.components()) == 1


def test_odd_cycle_not_bipartite():
    assert gen_cycle(5).bipartition() is None
    assert gen_cycle(6).bipartition() is not None


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.m


@given(graphs())
def test_networkx_roundtrip(g):
    h = g.to_networkx()
    assert Graph.from_edges(g.n, h.edges) == g
    assert sorted(map(sorted, g.components())) == sorted(sorted(c) for c in __import__("networkx").connected_components(h))


@given(graphs())
def test_bipartition_is_proper(g):
    parts = g.bipartition()
    if parts is not None:
        a, b = parts
        assert a | b == set(g.vertices) and not a & b
        assert all((u in a) != (v in a) for u, v in g.edges)
