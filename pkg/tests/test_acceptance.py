"""Acceptance checks 1-9. Each test prints one PASS/FAIL line."""

from __future__ import annotations

import random
import time
from collections import Counter

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import pseudoarboricity_oracle, random_planar_graph
from splitthick.bounds import bipartite_2splittable, complete_thickness, eq2_feasible
from splitthick.certificate import SplitCertificate, Violation, verify_certificate
from splitthick.exact import SearchBudget, Status, find_k_split
from splitthick.fixtures import block_certificate, k12_certificate, k78_certificate, signed_graph, torus_drawing
from splitthick.graph import Graph, gen_complete, gen_double_k12, gen_random
from splitthick.hardness import (WORKED_ASSIGNMENT, WORKED_INSTANCE, brute_force_sat, build_witness,
                                 random_instance, reduce)
from splitthick.planarity import check_empire_conditions, check_quadrangulation_conditions, is_planar
from splitthick.splitters import pseudoarboricity, split_by_degree, split_by_pseudoforests, split_projective, split_torus


@pytest.fixture
def report(capsys):
    def _report(n: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return _report


# 1 ----------------------------------------------------------------------

def test_criterion_1_complete_graphs(report):
    expected = [1, 1, 1, 1] + [2] * 8 + [-(-n // 6) for n in range(13, 31)]
    values = [complete_thickness(n) for n in range(1, 31)]
    budget = SearchBudget(max_nodes=10**7, max_time=60.0)
    runs = []
    for n in (5, 6):
        t0 = time.perf_counter()
        one = find_k_split(gen_complete(n), 1, budget)
        two = find_k_split(gen_complete(n), 2, budget)
        runs.append((n, one.status, two.status, time.perf_counter() - t0, two.nodes_explored))
    exact_ok = all(a is Status.UNSAT and b is Status.FOUND and dt < 60 for _, a, b, dt, _ in runs)
    detail = (f"closed form matches n=1..30: {values == expected}; "
              + "; ".join(f"f(K_{n})=2 [k=1 {a.value}, k=2 {b.value}, {nodes} nodes, {dt:.2f}s]"
                          for n, a, b, dt, nodes in runs))
    report(1, values == expected and exact_ok, detail)


# 2 ----------------------------------------------------------------------

def test_criterion_2_bipartite_two_split(report):
    t0 = time.perf_counter()
    mismatches = [(m, n) for m in range(1, 201) for n in range(m, 201)
                  if bipartite_2splittable(m, n) != eq2_feasible(m, m + n, 2)]
    elapsed = time.perf_counter() - t0
    true_cases = [(5, 16), (6, 10), (7, 8)]
    false_cases = [(5, 17), (6, 11), (7, 9)]
    boundary = all(bipartite_2splittable(*c) for c in true_cases) and not any(
        bipartite_2splittable(*c) for c in false_cases)
    ok = not mismatches and elapsed < 1.0 and boundary
    report(2, ok, f"{len(mismatches)} mismatches over 1<=m<=n<=200 in {elapsed:.3f}s; boundary cases {boundary}")


# 3 ----------------------------------------------------------------------

N_MAX = 200
# per-m limits on the larger side; None = unbounded
TABLE_ROWS = {
    2: {"unbounded_upto": 4, "limits": {5: 16, 6: 10, 7: 8}, "sum_family": 14},
    3: {"unbounded_upto": 6, "limits": {7: 38, 8: 22, 9: 16, 10: 14, 11: 12}, "sum_family": 22},
}


def _enumerate(k):
    return {(m, n) for m in range(1, N_MAX + 1) for n in range(1, N_MAX + 1) if eq2_feasible(m, m + n, k)}


def _table_set(k):
    row = TABLE_ROWS[k]
    pairs = set()
    for m in range(1, N_MAX + 1):
        for n in range(1, N_MAX + 1):
            a, b = min(m, n), max(m, n)
            if a <= row["unbounded_upto"]:
                pairs.add((m, n))
            elif a in row["limits"] and b <= row["limits"][a]:
                pairs.add((m, n))
            elif m + n == row["sum_family"]:
                pairs.add((m, n))
    return pairs


def test_criterion_3_table_rows(report):
    results = []
    for k in (2, 3):
        got = _enumerate(k)
        want = _table_set(k)
        # each listed per-m limit is tight
        tight = all(not eq2_feasible(m, m + lim + 1, k) for m, lim in TABLE_ROWS[k]["limits"].items())
        results.append((k, got == want, tight, len(got ^ want)))
    general = all(
        all((eq2_feasible(m, m + n, k)) == (m <= 2 * k or n <= (2 * k * m - 4) // (m - 2 * k))
            for m in range(1, 60) for n in range(1, 120))
        for k in range(4, 9))
    ok = all(eq and tight for _, eq, tight, _ in results) and general
    detail = "; ".join(f"k={k}: rows reproduced={eq}, limits tight={tight}, diff={d}" for k, eq, tight, d in results)
    report(3, ok, detail + f"; k>=4 closed form agrees={general}")


# 4 ----------------------------------------------------------------------

def test_criterion_4_rigid_blocks(report):
    k12 = k12_certificate()
    r12 = check_empire_conditions(k12)
    ok12 = (verify_certificate(k12, 2).ok and r12.ok and (r12.vertices, r12.edges, r12.faces) == (24, 66, 44)
            and set(r12.face_lengths) == {3} and set(k12.copies) == {2})
    k78 = k78_certificate()
    r78 = check_quadrangulation_conditions(k78)
    ok78 = (verify_certificate(k78, 2).ok and r78.ok and (r78.vertices, r78.edges) == (30, 56)
            and set(r78.face_lengths) == {4})
    report(4, ok12 and ok78,
           f"K_12: V={r12.vertices} E={r12.edges} F={r12.faces} triangles={set(r12.face_lengths) == {3}} "
           f"separate={r12.faces_separate}; K_7,8: V={r78.vertices} E={r78.edges} F={r78.faces} "
           f"quads={set(r78.face_lengths) == {4}} separate={r78.faces_separate}")


# 5 ----------------------------------------------------------------------

def test_criterion_5_surfaces(report):
    rows = []
    for name, make in [("K_7 torus", lambda: split_torus(torus_drawing("k7"))),
                       ("K_5 projective", lambda: split_projective(signed_graph("k5"))),
                       ("K_6 projective", lambda: split_projective(signed_graph("k6")))]:
        t0 = time.perf_counter()
        cert = make()
        ok = verify_certificate(cert, 2).ok and is_planar(cert.split_graph()[0])
        rows.append((name, ok, time.perf_counter() - t0))
    report(5, all(ok and dt < 1.0 for _, ok, dt in rows),
           "; ".join(f"{name} accepted={ok} in {dt:.3f}s" for name, ok, dt in rows))


# 6 ----------------------------------------------------------------------

def test_criterion_6_pseudoforest_approximation(report):
    rng = random.Random(2024)
    disagreements = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        g = gen_random(n, rng.random(), rng)
        disagreements += pseudoarboricity(g) != pseudoarboricity_oracle(g)
    planar_p = []
    for _ in range(50):
        g = random_planar_graph(rng.randint(4, 60), rng, density=rng.uniform(0.5, 1.0))
        planar_p.append(pseudoarboricity(g))
    cert = split_by_pseudoforests(gen_complete(12))
    k12_ok = verify_certificate(cert, 6).ok and cert.max_copies == 6 and 6 <= 3 * 2
    ok = disagreements == 0 and max(planar_p) <= 3 and k12_ok
    report(6, ok, f"oracle disagreements {disagreements}/500; max p over 50 planar graphs {max(planar_p)}; "
                  f"K_12 pseudoforest split valid 6-split={k12_ok}")


# 7 ----------------------------------------------------------------------

def test_criterion_7_hardness_end_to_end(report):
    t0 = time.perf_counter()
    rng = random.Random(11)
    blocks = {kb: block_certificate(kb) for kb in ("K12", "K78")}
    cases = [(WORKED_INSTANCE, WORKED_ASSIGNMENT)]
    while len(cases) < 26:
        inst = random_instance(rng)
        a = brute_force_sat(inst)
        if a is not None:
            cases.append((inst, a))
    accepted, max_deg78 = 0, 0
    for inst, a in cases:
        ok = True
        for kb, bc in blocks.items():
            hg = reduce(inst, kb)
            ok &= verify_certificate(build_witness(hg, a, bc), 2).ok
            if kb == "K78":
                max_deg78 = max(max_deg78, hg.graph.max_degree())
        accepted += ok
    elapsed = time.perf_counter() - t0
    ok = accepted == len(cases) and max_deg78 <= 15 and elapsed < 30
    report(7, ok, f"{accepted}/{len(cases)} witnesses accepted at k=2 (K12 and K78 blocks); "
                  f"K78 max degree {max_deg78}; {elapsed:.2f}s")


# 8 ----------------------------------------------------------------------

@st.composite
def mutated_certificates(draw):
    n = draw(st.integers(3, 9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs) - 1))
    g = Graph(n, frozenset(edges))
    maker = draw(st.sampled_from([split_by_degree, split_by_pseudoforests]))
    cert = maker(g)
    k = max(1, cert.max_copies)
    kind = draw(st.sampled_from(["drop", "bump", "corrupt"]))
    if kind == "drop":
        e = draw(st.sampled_from(g.sorted_edges))
        kept = tuple((a, b) for a, b in cert.edges if tuple(sorted((a[0], b[0]))) != e)
        return SplitCertificate(g, cert.copies, kept), k, Violation.UNCOVERED_EDGE
    if kind == "bump":
        v = draw(st.integers(0, n - 1))
        copies = list(cert.copies)
        copies[v] = k + 1
        return SplitCertificate(g, tuple(copies), cert.edges), k, Violation.COPY_BUDGET
    # redirect one endpoint of a split edge to a vertex that is not a neighbour of the other end
    options = [(t, side) for t, e in enumerate(cert.edges) for side in (0, 1)
               if g.degree(e[1 - side][0]) < n - 1]
    t, side = draw(st.sampled_from(options))
    anchor = cert.edges[t][1 - side][0]
    w = draw(st.sampled_from([x for x in range(n) if x != anchor and not g.has_edge(anchor, x)]))
    new = list(cert.edges[t])
    new[side] = (w, 1)
    es = list(cert.edges)
    es[t] = tuple(new)
    return SplitCertificate(g, cert.copies, tuple(es)), k, Violation.NON_EDGE


def test_criterion_8_verifier_robustness(report):
    tally = {"checked": 0, "wrong": [], "kinds": Counter()}

    @settings(max_examples=100, derandomize=True, database=None, deadline=None,
              suppress_health_check=[HealthCheck.too_slow])
    @given(mutated_certificates())
    def check(case):
        cert, k, code = case
        verdict = verify_certificate(cert, k)
        tally["checked"] += 1
        tally["kinds"][code.value] += 1
        if verdict.ok or code not in verdict.codes:
            tally["wrong"].append((code, sorted(c.value for c in verdict.codes)))

    check()
    ok = tally["checked"] >= 100 and not tally["wrong"] and len(tally["kinds"]) == 3
    kinds = ", ".join(f"{k}={v}" for k, v in sorted(tally["kinds"].items()))
    report(8, ok, f"{tally['checked']} mutated certificates ({kinds}), {len(tally['wrong'])} misclassified")


# 9 ----------------------------------------------------------------------

def test_criterion_9_documented_exclusions(report):
    # Not decided here: that the two-K_12 graph has no planar 2-split, and that a planar
    # 2-split of a reduction graph yields a satisfying assignment. Both need exact search far
    # beyond desk scale; only the generators are checked.
    h = gen_double_k12()
    h_ok = (h.n, h.m) == (23, 132) and sorted(h.degree(v) for v in h.vertices) == [11] * 22 + [22]
    inst = random_instance(random.Random(5))
    generators_ok = True
    for kb in ("K12", "K78"):
        try:
            reduce(inst, kb)       # runs the construction self-check
        except AssertionError:
            generators_ok = False
    report(9, h_ok and generators_ok,
           "EXCLUDED from testing (desk-scale infeasible): non-2-splittability of the two-K_12 graph and the "
           f"converse of the reduction; generator self-checks pass: double-K_12={h_ok}, reduction={generators_ok}")
