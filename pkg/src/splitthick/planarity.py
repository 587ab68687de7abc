"""Planarity, rotation-system embeddings, face tracing and empire checks.

The planarity decision and the initial rotation system come from the
Left-Right test in networkx. Face tracing is done here on our own
rotation system so that callers never depend on networkx embedding
objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import networkx as nx

from .graph import Graph

if TYPE_CHECKING:
    from .certificate import SplitCertificate


class NonPlanarError(ValueError):
    """Raised by :func:`embed` on non-planar input.

    ``witness`` holds the edges of a Kuratowski subgraph when the test
    produced one, else None.
    """

    def __init__(self, message: str, witness: frozenset | None = None):
        super().__init__(message)
        self.witness = witness


class EmbeddingError(ValueError):
    """Inconsistent rotation system."""


@dataclass(frozen=True)
class Embedding:
    """Rotation system: ``rotation[v]`` lists the neighbours of v in clockwise order."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Face:
    walk: tuple[tuple[int, int], ...]  # directed edges in traversal order
    vertices: frozenset[int]

    def __len__(self):
        return len(self.walk)


@dataclass(frozen=True)
class FaceList:
    """Faces traced per component. An isolated vertex contributes one empty walk."""

    faces: tuple[Face, ...]
    component_count: int

    def __len__(self):
        return len(self.faces)

    @property
    def plane_face_count(self) -> int:
        """Face count once the outer faces of all components are merged."""
        return len(self.faces) - max(self.component_count - 1, 0)


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.m <= 8:
        return True
    ok, _ = nx.check_planarity(g.to_networkx())
    return ok


def embed(g: Graph) -> Embedding:
    ok, emb = nx.check_planarity(g.to_networkx(), counterexample=True)
    if not ok:
        raise NonPlanarError("graph is not planar", frozenset(tuple(sorted(e)) for e in emb.edges))
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) if g.degree(v) else () for v in range(g.n))
    return Embedding(g, rotation, tuple(tuple(c) for c in g.components()))


def _check_rotation(e: Embedding) -> None:
    g = e.graph
    if len(e.rotation) != g.n:
        raise EmbeddingError("rotation system does not cover every vertex")
    for v, rot in enumerate(e.rotation):
        if len(rot) != len(set(rot)) or set(rot) != set(g.neighbors(v)):
            raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")


def faces(e: Embedding) -> FaceList:
    """Trace faces: after arriving at w from v, leave along the neighbour
    preceding v in w's clockwise rotation."""
    _check_rotation(e)
    position = [{u: i for i, u in enumerate(rot)} for rot in e.rotation]
    seen: set[tuple[int, int]] = set()
    out = []
    for comp in e.components:
        if len(comp) == 1 and not e.rotation[comp[0]]:
            out.append(Face((), frozenset(comp)))
            continue
        for v in comp:
            for w in e.rotation[v]:
                if (v, w) in seen:
                    continue
                walk = []
                dart = (v, w)
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart)
                    a, b = dart
                    rot = e.rotation[b]
                    dart = (b, rot[(position[b][a] - 1) % len(rot)])
                if dart != (v, w):
                    raise EmbeddingError("face walk did not close")
                out.append(Face(tuple(walk), frozenset(x for x, _ in walk)))
    return FaceList(tuple(out), len(e.components))


@dataclass(frozen=True)
class EmpireReport:
    """Per-condition outcome of the rigid-block checks on a 2-split.

    ``all_split``: every original vertex has exactly two copies.
    ``regular_faces``: the split graph is a triangulation (or a
    quadrangulation for the bipartite variant).
    ``faces_separate``: no face boundary holds two copies of one vertex.
    """

    all_split: bool
    regular_faces: bool
    faces_separate: bool
    vertices: int
    edges: int
    faces: int
    face_lengths: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.all_split and self.regular_faces and self.faces_separate


def _rigid_report(cert: SplitCertificate, face_len: int) -> EmpireReport:
    sg, labels = cert.split_graph()
    fl = faces(embed(sg))
    lengths = tuple(sorted(len(f) for f in fl.faces))
    all_split = all(k == 2 for k in cert.copies)
    if face_len == 3:
        count_ok = sg.n >= 3 and sg.m == 3 * sg.n - 6
    else:
        count_ok = sg.n >= 4 and sg.m == 2 * sg.n - 4
    regular = count_ok and len(sg.components()) == 1 and all(n == face_len for n in lengths)
    separate = True
    for f in fl.faces:
        owners = [labels[x][0] for x in f.vertices]
        if len(owners) != len(set(owners)):
            separate = False
            break
    return EmpireReport(all_split, regular, separate, sg.n, sg.m, fl.plane_face_count, lengths)


def check_empire_conditions(cert: SplitCertificate) -> EmpireReport:
    """Triangulation form of the 2-pire conditions (e.g. for a K_12 2-split)."""
    return _rigid_report(cert, 3)


def check_quadrangulation_conditions(cert: SplitCertificate) -> EmpireReport:
    """Bipartite form: every vertex split, all faces of length 4, no face
    holding two copies of one vertex (e.g. for a K_{7,8} 2-split)."""
    return _rigid_report(cert, 4)
