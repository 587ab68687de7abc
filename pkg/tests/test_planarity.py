from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import graphs, planar_oracle
from splitthick.certificate import SplitCertificate, identity_certificate
from splitthick.fixtures import k12_certificate, k78_certificate
from splitthick.graph import Graph, gen_complete, gen_complete_bipartite, gen_hypercube, gen_path, gen_petersen
from splitthick.planarity import (NonPlanarError, check_empire_conditions, check_quadrangulation_conditions,
                                  embed, faces, is_planar)
from splitthick.splitters import split_by_degree


@pytest.mark.parametrize("g, expected", [
    (gen_complete(4), True),
    (gen_complete(5), False),
    (gen_complete_bipartite(3, 3), False),
    (gen_complete_bipartite(2, 9), True),
    (gen_petersen(), False),
    (gen_hypercube(3), True),
    (gen_hypercube(4), False),
    (Graph(0, frozenset()), True),
])
def test_known_planarity(g, expected):
    assert is_planar(g) is expected


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6, max_m=10))
def test_is_planar_matches_rotation_oracle(g):
    assert is_planar(g) == planar_oracle(g)


def test_face_structure_of_small_graphs():
    assert sorted(len(f) for f in faces(embed(gen_complete(4))).faces) == [3] * 4
    assert sorted(len(f) for f in faces(embed(gen_hypercube(3))).faces) == [4] * 6
    assert sorted(len(f) for f in faces(embed(gen_complete_bipartite(2, 3))).faces) == [4] * 3
    tree = faces(embed(gen_path(5)))
    assert [len(f) for f in tree.faces] == [8]


def test_disconnected_faces():
    tri_pair = Graph(6, frozenset({(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}))
    fl = faces(embed(tri_pair))
    assert len(fl) == 4 and fl.plane_face_count == 3
    lone = faces(embed(Graph(1, frozenset())))
    assert len(lone) == 1 and lone.faces[0].walk == ()


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_euler_relation_and_dart_cover(g):
    if not is_planar(g):
        with pytest.raises(NonPlanarError):
            embed(g)
        return
    fl = faces(embed(g))
    c = len(g.components())
    assert g.n - g.m + fl.plane_face_count == 1 + c
    darts = Counter(d for f in fl.faces for d in f.walk)
    assert set(darts.values()) <= {1}
    assert len(darts) == 2 * g.m


def test_embedding_rotation_lists_neighbours():
    g = gen_complete(4)
    e = embed(g)
    for v in g.vertices:
        assert sorted(e.rotation[v]) == list(g.neighbors(v))


def test_non_planar_witness_is_kuratowski_subgraph():
    with pytest.raises(NonPlanarError) as info:
        embed(gen_petersen())
    w = info.value.witness
    assert w is not None and not is_planar(Graph(10, frozenset(tuple(sorted(e)) for e in w)))


def test_k12_fixture_satisfies_empire_conditions():
    rep = check_empire_conditions(k12_certificate())
    assert rep.ok
    assert (rep.vertices, rep.edges, rep.faces) == (24, 66, 44)
    assert set(rep.face_lengths) == {3}


def test_k78_fixture_is_a_quadrangulation():
    rep = check_quadrangulation_conditions(k78_certificate())
    assert rep.ok
    assert (rep.vertices, rep.edges, rep.faces) == (30, 56, 28)
    assert set(rep.face_lengths) == {4}


def test_empire_check_rejects_non_triangulation():
    rep = check_empire_conditions(split_by_degree(gen_complete(5)))
    assert rep.all_split and not rep.regular_faces and not rep.ok


def test_empire_check_flags_unsplit_vertices():
    rep = check_empire_conditions(identity_certificate(gen_complete(4)))
    assert not rep.all_split and rep.regular_faces


def test_faces_separate_detects_shared_face():
    # a 2-split of a 4-cycle as an 8-cycle: both faces hold both copies of every vertex
    g = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
    edges = (((0, 1), (1, 1)), ((1, 1), (2, 1)), ((2, 1), (3, 1)), ((3, 1), (0, 2)),
             ((0, 2), (1, 2)), ((1, 2), (2, 2)), ((2, 2), (3, 2)), ((3, 2), (0, 1)))
    rep = check_quadrangulation_conditions(SplitCertificate(g, (2, 2, 2, 2), edges))
    assert rep.all_split and not rep.faces_separate and not rep.ok
