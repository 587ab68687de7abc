"""Planar Cycle 3-SAT instances, the 2-split hardness reduction, and the
witness builder that turns a satisfying assignment into a planar 2-split.

Gadget vocabulary (role keys used in ``HardnessGraph.index``):

* ``("x", i)`` / ``("nx", i)``: the literal vertices of variable i
* ``("ring", i, r)`` for r = 1..4: the variable cycle
* ``("c", j)``, ``("c'", j)``, ``("l'", j, s)``: clause K_5 vertices
* ``("l", j, s)``: subdivision vertex for literal slot s of clause j

All of these except the ``l`` vertices are K-vertices, each glued to
its own copy of a rigid block (K_12 or K_{7,8}).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .certificate import Problem, SplitCertificate, Verdict, verify_certificate
from .graph import Graph, _norm, gen_complete, gen_complete_bipartite
from .planarity import check_empire_conditions, check_quadrangulation_conditions, is_planar


class SatProblem(str, Enum):
    WRONG_ARITY = "wrong-arity"
    BAD_LITERAL = "bad-literal"
    REPEATED_VARIABLE = "repeated-variable"
    CYCLE_NOT_PERMUTATION = "cycle-not-permutation"
    NON_PLANAR = "non-planar-incidence"


class UnsatisfiedAssignmentError(ValueError):
    pass


class BlockCertificateError(ValueError):
    pass


@dataclass(frozen=True)
class SatInstance:
    """3-CNF over variables 1..num_vars with a cyclic clause order.

    Literals are signed variable numbers. ``clause_cycle`` lists 0-based
    clause indices in cycle order.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    clause_cycle: tuple[int, ...]

    def satisfied_by(self, assignment: Mapping[int, bool]) -> list[int]:
        """Indices of the clauses that ``assignment`` falsifies."""
        return [j for j, c in enumerate(self.clauses)
                if not any(assignment[abs(x)] == (x > 0) for x in c)]


def incidence_graph(inst: SatInstance) -> Graph:
    """Variables 0..V-1, clauses V..V+C-1, variable-clause edges plus the clause cycle."""
    nv, nc = inst.num_vars, len(inst.clauses)
    edges = {(abs(x) - 1, nv + j) for j, c in enumerate(inst.clauses) for x in c}
    cyc = inst.clause_cycle
    if nc >= 2:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a != b:
                edges.add(_norm(nv + a, nv + b))
    return Graph(nv + nc, frozenset(edges))


def validate_instance(inst: SatInstance) -> Verdict:
    problems = []
    for j, c in enumerate(inst.clauses):
        if len(c) != 3:
            problems.append(Problem(SatProblem.WRONG_ARITY, f"clause {j + 1} has {len(c)} literals"))
        if any(x == 0 or abs(x) > inst.num_vars for x in c):
            problems.append(Problem(SatProblem.BAD_LITERAL, f"clause {j + 1} has a literal outside 1..{inst.num_vars}"))
        elif len({abs(x) for x in c}) != len(c):
            problems.append(Problem(SatProblem.REPEATED_VARIABLE, f"clause {j + 1} repeats a variable"))
    if sorted(inst.clause_cycle) != list(range(len(inst.clauses))):
        problems.append(Problem(SatProblem.CYCLE_NOT_PERMUTATION, "clause cycle is not a permutation of the clauses"))
    if not problems and not is_planar(incidence_graph(inst)):
        problems.append(Problem(SatProblem.NON_PLANAR, "variable-clause incidence graph plus clause cycle is not planar"))
    return Verdict(tuple(problems))


def brute_force_sat(inst: SatInstance) -> dict[int, bool] | None:
    """First satisfying assignment in lexicographic order (False < True), or None."""
    for bits in itertools.product((False, True), repeat=inst.num_vars):
        a = {i + 1: b for i, b in enumerate(bits)}
        if not inst.satisfied_by(a):
            return a
    return None


def random_instance(rng: random.Random, num_vars: tuple[int, int] = (3, 5),
                    num_clauses: tuple[int, int] = (1, 5), max_tries: int = 10_000) -> SatInstance:
    """Rejection-sample an instance that passes ``validate_instance``.

    Sizes are drawn per attempt from the inclusive ranges. Some sizes admit
    no planar instance at all (three variables and three clauses already
    contain K_{3,3}), hence ranges rather than fixed counts.
    """
    if num_vars[0] < 3 or num_clauses[0] < 1 or num_vars[0] > num_vars[1] or num_clauses[0] > num_clauses[1]:
        raise ValueError("need 3 <= min variables <= max variables and 1 <= min clauses <= max clauses")
    for _ in range(max_tries):
        nv, nc = rng.randint(*num_vars), rng.randint(*num_clauses)
        clauses = tuple(tuple(v if rng.random() < 0.5 else -v for v in rng.sample(range(1, nv + 1), 3))
                        for _ in range(nc))
        cycle = list(range(nc))
        rng.shuffle(cycle)
        inst = SatInstance(nv, clauses, tuple(cycle))
        if validate_instance(inst).ok:
            return inst
    raise RuntimeError(f"no planar instance found in {max_tries} draws")


# --------------------------------------------------------------------------
# reduction

BLOCKS = {"K12": (lambda: gen_complete(12), 0), "K78": (lambda: gen_complete_bipartite(7, 8), 7)}


def block_graph(kblock: str) -> Graph:
    return BLOCKS[kblock][0]()


def block_anchor(kblock: str) -> int:
    """Block vertex identified with the K-vertex (for K78: one on the side of size 8)."""
    return BLOCKS[kblock][1]


@dataclass(frozen=True)
class HardnessGraph:
    graph: Graph
    instance: SatInstance
    kblock: str
    kvertices: frozenset[int]
    index: dict[tuple, int]                  # gadget role -> label
    blocks: dict[int, tuple[int, ...]]       # K-vertex -> labels of its block, by block label

    def role(self, label: int) -> tuple | None:
        for r, v in self.index.items():
            if v == label:
                return r
        return None


def reduce(inst: SatInstance, kblock: str = "K12") -> HardnessGraph:
    """Build the 2-split hardness graph for a Planar Cycle 3-SAT instance."""
    if kblock not in BLOCKS:
        raise ValueError(f"kblock must be one of {sorted(BLOCKS)}, got {kblock!r}")
    verdict = validate_instance(inst)
    if not verdict.ok:
        raise ValueError("invalid instance: " + "; ".join(p.detail for p in verdict.problems))

    index: dict[tuple, int] = {}

    def new(role):
        index[role] = len(index)
        return index[role]

    for i in range(1, inst.num_vars + 1):
        new(("x", i))
        new(("nx", i))
        for r in range(1, 5):
            new(("ring", i, r))
    for j in range(len(inst.clauses)):
        new(("c", j))
        new(("c'", j))
        for s in range(1, 4):
            new(("l'", j, s))
    kverts = list(index.values())
    for j in range(len(inst.clauses)):
        for s in range(1, 4):
            new(("l", j, s))

    edges: set[tuple[int, int]] = set()

    def link(a, b):
        edges.add(_norm(index[a], index[b]))

    for i in range(1, inst.num_vars + 1):
        for r in range(1, 5):
            link(("ring", i, r), ("ring", i, r % 4 + 1))
        link(("ring", i, 1), ("x", i))
        link(("x", i), ("ring", i, 3))
        link(("ring", i, 2), ("nx", i))
        link(("nx", i), ("ring", i, 4))

    cyc = inst.clause_cycle
    if len(cyc) >= 2:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            link(("c", a), ("c", b))

    for j, clause in enumerate(inst.clauses):
        hub = [("c'", j)] + [("l'", j, s) for s in range(1, 4)]
        for a, b in itertools.combinations(hub, 2):
            link(a, b)
        link(("c", j), ("c'", j))
        for s, lit in enumerate(clause, start=1):
            link(("c", j), ("l", j, s))
            link(("l", j, s), ("l'", j, s))
            link(("x" if lit > 0 else "nx", abs(lit)), ("l", j, s))

    base = block_graph(kblock)
    anchor = block_anchor(kblock)
    n = len(index)
    blocks: dict[int, tuple[int, ...]] = {}
    for kv in kverts:
        labels = []
        for t in base.vertices:
            if t == anchor:
                labels.append(kv)
            else:
                labels.append(n)
                n += 1
        blocks[kv] = tuple(labels)
        edges.update(_norm(labels[a], labels[b]) for a, b in base.edges)

    hg = HardnessGraph(Graph(n, frozenset(edges)), inst, kblock, frozenset(kverts), index, blocks)
    _self_check(hg)
    return hg


def _self_check(hg: HardnessGraph) -> None:
    inst = hg.instance
    nk = 6 * inst.num_vars + 5 * len(inst.clauses)
    size = block_graph(hg.kblock).n
    g = hg.graph
    assert len(hg.kvertices) == nk
    assert g.n == nk * size + 3 * len(inst.clauses)
    plain = [v for role, v in hg.index.items() if role[0] == "l"]
    assert all(g.degree(v) == 3 for v in plain)


def max_kvertex_degree(hg: HardnessGraph) -> int:
    return max((hg.graph.degree(v) for v in hg.kvertices), default=0)


# --------------------------------------------------------------------------
# witness


def check_block_certificate(kblock: str, cert: SplitCertificate) -> None:
    """Raise BlockCertificateError unless ``cert`` is a rigid 2-split of the block."""
    if cert.base != block_graph(kblock):
        raise BlockCertificateError(f"certificate base is not the {kblock} block")
    verdict = verify_certificate(cert, 2)
    if not verdict.ok:
        raise BlockCertificateError("block certificate rejected: " + ", ".join(sorted(c.value for c in verdict.codes)))
    report = (check_empire_conditions if kblock == "K12" else check_quadrangulation_conditions)(cert)
    if not report.ok:
        raise BlockCertificateError(f"block certificate fails the rigid-block conditions: {report}")


def build_witness(hg: HardnessGraph, assignment: Mapping[int, bool],
                  kblock_cert: SplitCertificate) -> SplitCertificate:
    """Planar 2-split of ``hg.graph`` from a satisfying assignment.

    False literal slots are split with the variable edge on its own copy;
    true slots keep the variable and clause edges together and drop the
    edge to ``l'`` onto the second copy. Each block is split as in
    ``kblock_cert``, with copy 1 of the K-vertex carrying every edge that
    leaves the block.
    """
    inst = hg.instance
    missing = [i for i in range(1, inst.num_vars + 1) if i not in assignment]
    if missing:
        raise UnsatisfiedAssignmentError(f"assignment leaves variables {missing} unset")
    bad = inst.satisfied_by(assignment)
    if bad:
        raise UnsatisfiedAssignmentError(f"assignment falsifies clause(s) {[j + 1 for j in bad]}")
    check_block_certificate(hg.kblock, kblock_cert)

    g = hg.graph
    idx = hg.index
    copies = [1] * g.n
    edges: list = []
    block_edges: set[tuple[int, int]] = set()

    for kv, labels in hg.blocks.items():
        for t, lab in enumerate(labels):
            copies[lab] = kblock_cert.copies[t]
        for (s, i), (t, j) in kblock_cert.edges:
            edges.append(((labels[s], i), (labels[t], j)))
            block_edges.add(_norm(labels[s], labels[t]))

    slot_side: dict[int, dict[int, int]] = {}
    for j, clause in enumerate(inst.clauses):
        for s, lit in enumerate(clause, start=1):
            ell = idx[("l", j, s)]
            var_vertex = idx[("x" if lit > 0 else "nx", abs(lit))]
            true = assignment[abs(lit)] == (lit > 0)
            copies[ell] = 2
            if true:
                slot_side[ell] = {var_vertex: 1, idx[("c", j)]: 1, idx[("l'", j, s)]: 2}
            else:
                slot_side[ell] = {var_vertex: 2, idx[("c", j)]: 1, idx[("l'", j, s)]: 1}

    for u, v in g.sorted_edges:
        if (u, v) in block_edges:
            continue
        cu = slot_side[u][v] if u in slot_side else 1
        cv = slot_side[v][u] if v in slot_side else 1
        edges.append(((u, cu), (v, cv)))

    return SplitCertificate(g, tuple(copies), tuple(edges))


# worked instance (~v1 | ~v2 | ~v3)(v1 | v2 | v4)(v2 | ~v3 | ~v4) with a satisfying assignment
WORKED_INSTANCE = SatInstance(4, ((-1, -2, -3), (1, 2, 4), (2, -3, -4)), (0, 1, 2))
WORKED_ASSIGNMENT = {1: True, 2: False, 3: False, 4: False}
