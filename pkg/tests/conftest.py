"""Shared strategies and brute-force oracles.

The oracles are deliberately naive and share no code with the package:
planarity by enumerating rotation systems, pseudoarboricity and
arboricity by subset density and forest partition search.
"""

from __future__ import annotations

import itertools
import math
import random

import networkx as nx
import numpy as np
from hypothesis import strategies as st
from scipy.spatial import Delaunay

from splitthick.graph import Graph


# ---- strategies ----------------------------------------------------------

@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, max_m: int | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, frozenset(chosen))


# ---- planarity oracle ----------------------------------------------------

def _faces_of_rotation(adj: dict[int, list[int]], rot: dict[int, tuple[int, ...]]) -> int:
    nxt = {}
    for v, order in rot.items():
        for t, w in enumerate(order):
            nxt[(w, v)] = (v, order[(t + 1) % len(order)])
    seen, count = set(), 0
    for d in nxt:
        if d in seen:
            continue
        count += 1
        while d not in seen:
            seen.add(d)
            d = nxt[d]
    return count


def _connected_planar(vs: list[int], edges: list[tuple[int, int]]) -> bool:
    if len(edges) <= 2:
        return True
    adj = {v: [] for v in vs}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    choices = []
    for v in vs:
        first, rest = adj[v][0], adj[v][1:]
        choices.append([(first,) + p for p in itertools.permutations(rest)])
    for combo in itertools.product(*choices):
        rot = dict(zip(vs, combo))
        if len(vs) - len(edges) + _faces_of_rotation(adj, rot) == 2:
            return True
    return False


def planar_oracle(g: Graph) -> bool:
    """Planar iff every component has a rotation system meeting Euler's formula."""
    h = nx.Graph(list(g.edges))
    return all(_connected_planar(sorted(c), list(h.subgraph(c).edges)) for c in nx.connected_components(h))


# ---- density oracles -----------------------------------------------------

def _induced_edges(g: Graph, s) -> int:
    s = set(s)
    return sum(1 for u, v in g.edges if u in s and v in s)


def pseudoarboricity_oracle(g: Graph) -> int:
    """max over nonempty S of ceil(|E(S)| / |S|)."""
    best = 0
    for r in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            best = max(best, math.ceil(_induced_edges(g, s) / r))
    return best


def arboricity_oracle(g: Graph) -> int:
    """Least a such that the edges split into a forests, by backtracking."""
    edges = sorted(g.edges)
    if not edges:
        return 0

    def fits(a: int) -> bool:
        parent = [list(range(g.n)) for _ in range(a)]

        def find(f, x):
            while parent[f][x] != x:
                x = parent[f][x]
            return x

        def place(t: int) -> bool:
            if t == len(edges):
                return True
            u, v = edges[t]
            tried_empty = False
            for f in range(a):
                ru, rv = find(f, u), find(f, v)
                if ru == rv:
                    continue
                empty = all(parent[f][x] == x for x in range(g.n))
                if empty and tried_empty:
                    continue   # empty forests are interchangeable
                tried_empty |= empty
                parent[f][ru] = rv
                if place(t + 1):
                    return True
                parent[f][ru] = ru
            return False

        return place(0)

    a = 1
    while not fits(a):
        a += 1
    return a


# ---- random planar graphs ------------------------------------------------

def random_planar_graph(n: int, rng: random.Random, density: float = 1.0) -> Graph:
    """Delaunay triangulation of random points, keeping each edge with probability ``density``."""
    if n < 3:
        return Graph(n, frozenset({(0, 1)} if n == 2 and density > 0 else set()))
    pts = np.array([[rng.random(), rng.random()] for _ in range(n)])
    edges = set()
    for tri in Delaunay(pts).simplices:
        for a, b in itertools.combinations(sorted(int(x) for x in tri), 2):
            edges.add((a, b))
    return Graph(n, frozenset(e for e in sorted(edges) if rng.random() < density))
