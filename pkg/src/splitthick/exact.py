"""Exact k-splittability for small graphs by branch and bound.

The search assigns every base edge to one pair of copies, so the
certificates it finds carry exactly one split edge per base edge. That
loses nothing: deleting surplus split edges from a planar k-split leaves
a planar k-split.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from .bounds import lb_euler
from .certificate import SplitCertificate, verify_certificate
from .graph import Graph


class Status(str, Enum):
    FOUND = "FOUND"
    UNSAT = "UNSAT"
    EXHAUSTED = "EXHAUSTED"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_time: float = 60.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_time <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    certificate: SplitCertificate | None
    nodes_explored: int


class _Exhausted(Exception):
    pass


def edge_order(g: Graph) -> list[tuple[int, int]]:
    """Fail-first order: edges at high-degree endpoints first."""
    def key(e):
        du, dv = g.degree(e[0]), g.degree(e[1])
        return (-max(du, dv), -min(du, dv), e)
    return sorted(g.edges, key=key)


def find_k_split(g: Graph, k: int, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Decide whether g has a planar k-split.

    Copies of a vertex are opened in order (a new index only once all
    smaller ones are in use), and any partial split graph that is not
    planar is cut off, since adding edges never restores planarity.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if lb_euler(g) > k:
        return SearchOutcome(Status.UNSAT, None, 0)

    order = edge_order(g)
    used = [0] * g.n
    h = nx.Graph()
    chosen: list[tuple[tuple[int, int], tuple[int, int]]] = []
    nodes = 0
    deadline = time.monotonic() + budget.max_time

    def safe(a, b, fresh) -> bool:
        # a pendant edge, or a result with at most 8 edges, cannot break planarity
        if fresh or h.number_of_edges() < 8:
            return True
        if not nx.has_path(h, a, b):
            return True
        h.add_edge(a, b)
        ok = nx.check_planarity(h)[0]
        h.remove_edge(a, b)
        return ok

    def dfs(t: int) -> bool:
        nonlocal nodes
        if t == len(order):
            return True
        u, v = order[t]
        for i in range(1, min(used[u] + 1, k) + 1):
            for j in range(1, min(used[v] + 1, k) + 1):
                nodes += 1
                if nodes > budget.max_nodes or (nodes & 1023 == 0 and time.monotonic() > deadline):
                    raise _Exhausted
                a, b = (u, i), (v, j)
                new_a, new_b = i > used[u], j > used[v]
                if not safe(a, b, new_a or new_b):
                    continue
                if new_a:
                    used[u] += 1
                if new_b:
                    used[v] += 1
                h.add_edge(a, b)
                chosen.append((a, b))
                if dfs(t + 1):
                    return True
                chosen.pop()
                h.remove_edge(a, b)
                if new_a:
                    used[u] -= 1
                    h.remove_node(a)
                if new_b:
                    used[v] -= 1
                    h.remove_node(b)
        return False

    try:
        found = dfs(0)
    except _Exhausted:
        return SearchOutcome(Status.EXHAUSTED, None, nodes)
    if not found:
        return SearchOutcome(Status.UNSAT, None, nodes)
    cert = SplitCertificate(g, tuple(max(1, c) for c in used), tuple(chosen)).canonical()
    assert verify_certificate(cert, k).ok, "search produced an invalid certificate"
    return SearchOutcome(Status.FOUND, cert, nodes)


def split_thickness_exact(g: Graph, k_max: int, budget: SearchBudget = SearchBudget()) -> int | None:
    """Least k <= k_max with a planar k-split; None if unknown within the budget or above k_max."""
    for k in range(1, k_max + 1):
        out = find_k_split(g, k, budget)
        if out.status is Status.FOUND:
            return k
        if out.status is Status.EXHAUSTED:
            return None
    return None
