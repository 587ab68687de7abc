"""Search for rigid 2-splits of K_12 and K_{7,8} by simulated annealing.

A 2-split of K_12 with 24 vertices and 66 edges is a triangulation whose
vertices come in 12 colour pairs with every pair of colours adjacent
exactly once. The K_{7,8} case is the bipartite analogue on a
quadrangulation with 30 vertices and 56 edges. The search walks over
triangulations (quadrangulations) with edge rotations, which keep the
face structure valid, and over colourings with swaps. The cost is the
number of colour pairs that are missing.

Results are written as certificate files and then checked with the
package's own verifier and rigid-block checkers.

    python scripts/search_empire_maps.py --which k12 --seed 0
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from splitthick.certificate import SplitCertificate, verify_certificate
from splitthick.graph import gen_complete, gen_complete_bipartite
from splitthick.io import emit_certificate
from splitthick.planarity import check_empire_conditions, check_quadrangulation_conditions

DATA = Path(__file__).resolve().parents[1] / "src" / "splitthick" / "data"


@dataclass
class AnnealConfig:
    iters: int = 1_000_000
    t_start: float = 1.0
    t_end: float = 0.02
    restarts: int = 20


class FaceMap:
    """Sphere map with all faces of one length, stored as oriented vertex cycles."""

    def __init__(self, face_len):
        self.s = face_len
        self.faces = {}
        self.dart = {}
        self.adj = {}
        self._next = 0

    def add_face(self, cyc):
        fid = self._next
        self._next += 1
        self.faces[fid] = tuple(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            self.dart[(a, b)] = fid

    def drop_face(self, fid):
        cyc = self.faces.pop(fid)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            del self.dart[(a, b)]

    def link(self, u, v):
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    def unlink(self, u, v):
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def edges(self):
        return sorted((u, v) for u in self.adj for v in self.adj[u] if u < v)


def stacked_triangulation(n, rng):
    fm = FaceMap(3)
    for u, v in [(0, 1), (1, 2), (2, 0)]:
        fm.link(u, v)
    fm.add_face([0, 1, 2])
    fm.add_face([0, 2, 1])
    for w in range(3, n):
        fid = rng.choice(sorted(fm.faces))
        a, b, c = fm.faces[fid]
        fm.drop_face(fid)
        for x in (a, b, c):
            fm.link(w, x)
        fm.add_face([a, b, w])
        fm.add_face([b, c, w])
        fm.add_face([c, a, w])
    return fm


def stacked_quadrangulation(nblack, nwhite, rng):
    """Black vertices are 0..nblack-1, white ones follow."""
    fm = FaceMap(4)
    b0, b1, w0, w1 = 0, 1, nblack, nblack + 1
    for u, v in [(b0, w0), (w0, b1), (b1, w1), (w1, b0)]:
        fm.link(u, v)
    fm.add_face([b0, w0, b1, w1])
    fm.add_face([b0, w1, b1, w0])
    todo = ["b"] * (nblack - 2) + ["w"] * (nwhite - 2)
    rng.shuffle(todo)
    nb, nw = 2, nblack + 2
    for kind in todo:
        fid = rng.choice(sorted(fm.faces))
        cyc = fm.faces[fid]
        # a new white vertex hangs off two opposite black corners and vice versa
        r = next(r for r in range(4) if (cyc[r] < nblack) == (kind == "w"))
        a, b, c, d = cyc[r:] + cyc[:r]
        if kind == "b":
            w, nb = nb, nb + 1
        else:
            w, nw = nw, nw + 1
        fm.drop_face(fid)
        fm.link(w, a)
        fm.link(w, c)
        fm.add_face([a, b, c, w])
        fm.add_face([a, w, c, d])
    return fm


def _key(cu, cv):
    return (cu, cv) if cu <= cv else (cv, cu)


def anneal(fm, colour, groups, min_degree, cfg, rng):
    """Minimise the number of colour pairs not realised by an edge. True on success."""
    s = fm.s
    pairs = Counter(_key(colour[u], colour[v]) for u, v in fm.edges())
    target = sum(pairs.values())

    def good():
        return sum(1 for a, b in pairs if a != b)

    cost = target - good()
    for it in range(cfg.iters):
        if cost == 0:
            return True
        temp = cfg.t_start * (cfg.t_end / cfg.t_start) ** (it / cfg.iters)
        if rng.random() < 0.5:
            u = rng.choice(sorted(fm.adj))
            v = rng.choice(sorted(fm.adj[u]))
            if len(fm.adj[u]) <= min_degree or len(fm.adj[v]) <= min_degree:
                continue
            f1, f2 = fm.dart[(u, v)], fm.dart[(v, u)]
            if f1 == f2:
                continue
            F1, F2 = fm.faces[f1], fm.faces[f2]
            i1, i2 = F1.index(u), F2.index(v)
            cyc = list((F1[i1:] + F1[:i1])[1:]) + list((F2[i2:] + F2[:i2])[1:])
            L = len(cyc)
            i = rng.randrange(1, s - 1)
            p, q = cyc[i], cyc[(i + s - 1) % L]
            if p == q or q in fm.adj[p]:
                continue
            A = [cyc[(i + t) % L] for t in range(s)]
            B = [cyc[(i + s - 1 + t) % L] for t in range(s)]
            if len(set(A)) < s or len(set(B)) < s:
                continue
            old, new = _key(colour[u], colour[v]), _key(colour[p], colour[q])
            before = good()
            pairs[old] -= 1
            if not pairs[old]:
                del pairs[old]
            pairs[new] += 1
            delta = before - good()
            if delta <= 0 or rng.random() < math.exp(-delta / temp):
                fm.drop_face(f1)
                fm.drop_face(f2)
                fm.unlink(u, v)
                fm.link(p, q)
                fm.add_face(A)
                fm.add_face(B)
                cost += delta
            else:
                pairs[new] -= 1
                if not pairs[new]:
                    del pairs[new]
                pairs[old] += 1
        else:
            a, b = rng.sample(rng.choice(groups), 2)
            if colour[a] == colour[b]:
                continue
            touched = {_key(x, y) for x in (a, b) for y in fm.adj[x]}
            before = good()

            def swap():
                for x, y in touched:
                    k = _key(colour[x], colour[y])
                    pairs[k] -= 1
                    if not pairs[k]:
                        del pairs[k]
                colour[a], colour[b] = colour[b], colour[a]
                for x, y in touched:
                    pairs[_key(colour[x], colour[y])] += 1

            swap()
            delta = before - good()
            if delta <= 0 or rng.random() < math.exp(-delta / temp):
                cost += delta
            else:
                swap()
    return cost == 0


def to_certificate(fm, colour, base, colour_to_vertex):
    """Copies numbered in order of first appearance in the sorted edge list."""
    used = [0] * base.n
    ident = {}
    edges = []
    for u, v in fm.edges():
        for x in (u, v):
            if x not in ident:
                o = colour_to_vertex[colour[x]]
                used[o] += 1
                ident[x] = (o, used[o])
        edges.append((ident[u], ident[v]))
    return SplitCertificate(base, tuple(used), tuple(edges))


def search_k12(seed, cfg):
    for attempt in range(cfg.restarts):
        rng = random.Random(seed * 1000 + attempt)
        fm = stacked_triangulation(24, rng)
        perm = list(range(24))
        rng.shuffle(perm)
        colour = {v: perm[v] // 2 for v in range(24)}
        if anneal(fm, colour, [list(range(24))], 3, cfg, rng):
            return to_certificate(fm, colour, gen_complete(12), {c: c for c in range(12)})
    return None


def search_k78(seed, cfg):
    for attempt in range(cfg.restarts):
        rng = random.Random(seed * 1000 + attempt)
        fm = stacked_quadrangulation(14, 16, rng)
        black, white = list(range(14)), list(range(14, 30))
        rng.shuffle(black)
        rng.shuffle(white)
        colour = {v: i // 2 for i, v in enumerate(black)}
        colour.update({v: 7 + i // 2 for i, v in enumerate(white)})
        if anneal(fm, colour, [list(range(14)), list(range(14, 30))], 2, cfg, rng):
            return to_certificate(fm, colour, gen_complete_bipartite(7, 8), {c: c for c in range(15)})
    return None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--which", choices=["k12", "k78", "both"], default="both")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--iters", type=int, default=AnnealConfig.iters)
    ap.add_argument("--out", type=Path, default=DATA)
    args = ap.parse_args(argv)
    cfg = AnnealConfig(iters=args.iters)

    jobs = {"k12": (search_k12, check_empire_conditions, "k12_2split.json"),
            "k78": (search_k78, check_quadrangulation_conditions, "k78_2split.json")}
    status = 0
    for name in (["k12", "k78"] if args.which == "both" else [args.which]):
        search, checker, fname = jobs[name]
        cert = search(args.seed, cfg)
        if cert is None:
            print(f"{name}: no split found", file=sys.stderr)
            status = 1
            continue
        verdict = verify_certificate(cert, 2)
        report = checker(cert)
        print(f"{name}: verify={verdict.ok} rigid={report.ok} "
              f"V={report.vertices} E={report.edges} F={report.faces}")
        if verdict.ok and report.ok:
            (args.out / fname).write_text(emit_certificate(cert))
        else:
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
