"""Simple undirected graphs on dense integer labels, plus family generators."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Edges are stored as sorted pairs. Construction rejects self-loops,
    duplicate edges and endpoints outside ``range(n)``.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        seen = set()
        for u, v in edges:
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def subgraph(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled densely in increasing label order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """2-colouring by BFS, or None for non-bipartite graphs.

        Each component puts its smallest label on the first side.
        """
        colour = [-1] * self.n
        for s in range(self.n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return None
        return (frozenset(v for v in range(self.n) if colour[v] == 0),
                frozenset(v for v in range(self.n) if colour[v] == 1))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def gen_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: labels ``0..m-1`` form the first part, ``m..m+n-1`` the second."""
    if m < 1 or n < 1:
        raise ValueError(f"both parts must be non-empty, got ({m}, {n})")
    return Graph(m + n, frozenset((a, m + b) for a in range(m) for b in range(n)))


def gen_double_k12() -> Graph:
    """Two copies of K_12 glued at vertex 0 (23 vertices, 132 edges)."""
    first = list(range(12))
    second = [0] + list(range(12, 23))
    edges = set(itertools.combinations(first, 2)) | set(itertools.combinations(second, 2))
    return Graph(23, frozenset(edges))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph(n, frozenset((v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1))


def gen_circulant(n: int, offsets: Iterable[int]) -> Graph:
    edges = {_norm(i, (i + s) % n) for i in range(n) for s in offsets if s % n}
    return Graph(n, frozenset(edges))


def gen_random(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``."""
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def gen_random_tree(n: int, rng: random.Random) -> Graph:
    return Graph(n, frozenset((rng.randrange(v), v) for v in range(1, n)))
