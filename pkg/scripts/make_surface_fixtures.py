"""Write the torus and projective-plane fixture files.

K_7 on the torus: the triangular lattice Z^2 (steps (1,0), (0,1), (1,1))
modulo the index-7 sublattice {(a, b) : a + 2b = 0 mod 7}. Lattice point
(a, b) carries label (a + 2b) mod 7, so the six steps realise offsets
+-1, +-2, +-3 and the quotient is the circulant C_7(1, 2, 3) = K_7. A
linear map sends the sublattice basis (7, 0), (-2, 1) to the unit square
sides; wrap vectors are read off from the straight edge segments.

K_6 on the projective plane: the icosahedron modulo the antipodal map.
An edge gets sign -1 when it joins the chosen representative of one
class to the antipode of the other's representative.

K_5 fixtures are the restrictions to labels 0..4.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from pathlib import Path

from splitthick.graph import Graph
from splitthick.io import emit_signed, emit_torus
from splitthick.splitters import SignedGraph, TorusDrawing

DATA = Path(__file__).resolve().parents[1] / "src" / "splitthick" / "data"


def k7_torus() -> TorusDrawing:
    # x = (a + 2b)/7, y = b in square coordinates: (7,0) -> (1,0), (-2,1) -> (0,1)
    shift = (Fraction(1, 14), Fraction(1, 2))
    pos = {a: (Fraction(a, 7) + shift[0], shift[1]) for a in range(7)}
    wrap = {}
    for a in range(7):
        for step in ((1, 0), (0, 1), (1, 1)):
            dx = Fraction(step[0] + 2 * step[1], 7)
            dy = Fraction(step[1])
            x1, y1 = pos[a][0] + dx, pos[a][1] + dy
            wx, wy = math.floor(x1), math.floor(y1)
            b = (a + step[0] + 2 * step[1]) % 7
            assert (x1 - wx, y1 - wy) == pos[b]
            u, v = (a, b) if a < b else (b, a)
            wrap[(u, v)] = (wx, wy) if a < b else (-wx, -wy)
    g = Graph(7, frozenset(wrap))
    coords = {v: (float(x), float(y)) for v, (x, y) in pos.items()}
    return TorusDrawing(g, wrap, coords)


def restrict_torus(d: TorusDrawing, keep: int) -> TorusDrawing:
    wrap = {e: w for e, w in d.wrap.items() if max(e) < keep}
    coords = {v: c for v, c in (d.coords or {}).items() if v < keep}
    return TorusDrawing(Graph(keep, frozenset(wrap)), wrap, coords)


def icosahedron_quotient() -> SignedGraph:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1, s2 in itertools.product((1, -1), repeat=2):
        pts += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    reps = [p for p in pts if next(c for c in p if c != 0) > 0]
    reps.sort(key=lambda p: (abs(p[0]) < 1e-9, abs(p[1]) < 1e-9, p))

    def dist(p, q):
        return math.dist(p, q)

    sign = {}
    for i, j in itertools.combinations(range(6), 2):
        p, q = reps[i], reps[j]
        if abs(dist(p, q) - 2) < 1e-9:
            sign[(i, j)] = 1
        elif abs(dist(p, tuple(-c for c in q)) - 2) < 1e-9:
            sign[(i, j)] = -1
    assert len(sign) == 15
    return SignedGraph(Graph(6, frozenset(sign)), sign)


def restrict_signed(sg: SignedGraph, keep: int) -> SignedGraph:
    sign = {e: s for e, s in sg.sign.items() if max(e) < keep}
    return SignedGraph(Graph(keep, frozenset(sign)), sign)


def main():
    k7 = k7_torus()
    (DATA / "k7.torus").write_text(emit_torus(k7))
    (DATA / "k5.torus").write_text(emit_torus(restrict_torus(k7, 5)))
    k6 = icosahedron_quotient()
    (DATA / "k6.signed").write_text(emit_signed(k6))
    (DATA / "k5.signed").write_text(emit_signed(restrict_signed(k6, 5)))
    print("wrote", ", ".join(sorted(p.name for p in DATA.iterdir())))


if __name__ == "__main__":
    main()
