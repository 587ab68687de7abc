"""Split certificates: the witness object every splitter emits.

A certificate lists, for every original vertex ``v``, its copy count
``k_v`` (copies are identified as ``(v, i)`` with ``1 <= i <= k_v``), and
the split edges ``((u, i), (v, j))`` joining copy i of u to copy j of v.
The constructor accepts malformed data on purpose; :func:`verify_certificate`
is where every invariant is checked and reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, _norm
from .planarity import is_planar

Copy = tuple[int, int]
SplitEdge = tuple[Copy, Copy]


class Violation(str, Enum):
    BAD_COPY_COUNT = "bad-copy-count"      # k_v < 1, or copy table size != |V|
    DANGLING_COPY = "dangling-copy"        # refers to a missing vertex or copy index
    SELF_LOOP = "self-loop"
    NON_EDGE = "non-edge"                  # projects onto a pair that is not a base edge
    DUPLICATE_EDGE = "duplicate-edge"
    UNCOVERED_EDGE = "uncovered-edge"
    COPY_BUDGET = "copy-budget"            # some k_v exceeds k
    NON_PLANAR = "non-planar"


@dataclass(frozen=True)
class Problem:
    code: Violation
    detail: str


@dataclass(frozen=True)
class Verdict:
    problems: tuple[Problem, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def codes(self) -> frozenset[Violation]:
        return frozenset(p.code for p in self.problems)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SplitCertificate:
    base: Graph
    copies: tuple[int, ...]
    edges: tuple[SplitEdge, ...]

    @property
    def max_copies(self) -> int:
        return max(self.copies, default=0)

    def copy_ids(self, v: int) -> list[Copy]:
        return [(v, i) for i in range(1, self.copies[v] + 1)]

    def copy_labels(self) -> list[Copy]:
        """All copies in (vertex, index) order; position = split-graph label."""
        return [(v, i) for v in range(len(self.copies)) for i in range(1, self.copies[v] + 1)]

    def split_graph(self) -> tuple[Graph, list[Copy]]:
        """The graph on copies induced by the split edges.

        Edges with dangling endpoints, self-loops and repeats are skipped, so
        this also works on certificates that fail verification.
        """
        labels = self.copy_labels()
        index = {c: i for i, c in enumerate(labels)}
        edges = set()
        for a, b in self.edges:
            if a in index and b in index and a != b:
                edges.add(_norm(index[a], index[b]))
        return Graph(len(labels), frozenset(edges)), labels

    def project(self) -> Graph:
        return project(self)

    def canonical(self) -> SplitCertificate:
        """Renumber copies in first-use order and sort the edge list.

        Copies that carry no edge are dropped (every vertex keeps at least one).
        """
        rename: dict[Copy, Copy] = {}
        used = [0] * len(self.copies)
        for a, b in self.edges:
            for c in (a, b):
                if c not in rename:
                    used[c[0]] += 1
                    rename[c] = (c[0], used[c[0]])
        edges = []
        for a, b in self.edges:
            x, y = rename[a], rename[b]
            edges.append((x, y) if x <= y else (y, x))
        return SplitCertificate(self.base, tuple(max(1, u) for u in used), tuple(sorted(edges)))


def identity_certificate(g: Graph) -> SplitCertificate:
    return SplitCertificate(g, (1,) * g.n, tuple(((u, 1), (v, 1)) for u, v in g.sorted_edges))


def project(cert: SplitCertificate) -> Graph:
    """Collapse split edges onto original vertex pairs.

    Pairs that are not base edges are dropped, so the result is always a
    subgraph of the base.
    """
    base = cert.base
    return Graph(base.n, frozenset(
        _norm(a[0], b[0]) for a, b in cert.edges
        if a[0] != b[0] and 0 <= a[0] < base.n and 0 <= b[0] < base.n
        and base.has_edge(a[0], b[0])))


def verify_certificate(cert: SplitCertificate, k: int) -> Verdict:
    """Check that ``cert`` is a planar k-split of its base graph.

    Every violated condition is reported, each with its own code.
    """
    base = cert.base
    problems: list[Problem] = []

    if len(cert.copies) != base.n:
        problems.append(Problem(Violation.BAD_COPY_COUNT,
                                f"copy table has {len(cert.copies)} entries for {base.n} vertices"))
    for v, kv in enumerate(cert.copies):
        if kv < 1:
            problems.append(Problem(Violation.BAD_COPY_COUNT, f"vertex {v} has {kv} copies"))
        elif kv > k:
            problems.append(Problem(Violation.COPY_BUDGET, f"vertex {v} has {kv} copies > {k}"))

    def valid(c: Copy) -> bool:
        v, i = c
        return 0 <= v < min(base.n, len(cert.copies)) and 1 <= i <= cert.copies[v]

    seen: set[tuple[Copy, Copy]] = set()
    covered: set[tuple[int, int]] = set()
    for a, b in cert.edges:
        if not (valid(a) and valid(b)):
            bad = a if not valid(a) else b
            problems.append(Problem(Violation.DANGLING_COPY, f"split edge {a}-{b} uses missing copy {bad}"))
            continue
        if a[0] == b[0]:
            problems.append(Problem(Violation.SELF_LOOP, f"split edge {a}-{b} joins copies of one vertex"))
            continue
        key = (a, b) if a <= b else (b, a)
        if key in seen:
            problems.append(Problem(Violation.DUPLICATE_EDGE, f"split edge {a}-{b} repeated"))
            continue
        seen.add(key)
        if not base.has_edge(a[0], b[0]):
            problems.append(Problem(Violation.NON_EDGE,
                                    f"split edge {a}-{b} projects onto non-edge ({a[0]}, {b[0]})"))
            continue
        covered.add(_norm(a[0], b[0]))

    for e in base.sorted_edges:
        if e not in covered:
            problems.append(Problem(Violation.UNCOVERED_EDGE, f"base edge {e} has no split edge"))

    if len(cert.copies) == base.n and all(kv >= 1 for kv in cert.copies):
        sg, _ = cert.split_graph()
        if not is_planar(sg):
            problems.append(Problem(Violation.NON_PLANAR, "split graph is not planar"))
    return Verdict(tuple(problems))
