"""Command-line interface.

Exit codes: 0 success or accept, 1 reject or UNSAT, 2 search budget
exhausted, 3 input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import bounds as _bounds
from .certificate import SplitCertificate, verify_certificate
from .draw import draw_certificate, draw_graph
from .exact import SearchBudget, Status, find_k_split
from .graph import (Graph, gen_complete, gen_complete_bipartite, gen_cycle, gen_double_k12,
                    gen_petersen, gen_random)
from .hardness import random_instance, reduce
from .io import (ParseError, emit_certificate, emit_edgelist, emit_sat, parse_certificate,
                 parse_edgelist, parse_sat, parse_signed, parse_torus)
from .planarity import NonPlanarError, check_empire_conditions, check_quadrangulation_conditions
from .splitters import (InvalidEmbeddingError, split_by_degree, split_by_pseudoforests,
                        split_complete_bipartite, split_projective, split_torus)

EXIT_OK, EXIT_REJECT, EXIT_EXHAUSTED, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---- gen -----------------------------------------------------------------

def cmd_gen(args) -> int:
    fam = args.family
    if fam == "sat":
        rng = random.Random(args.seed)
        inst = random_instance(rng, (args.vars, args.vars), (args.clauses, args.clauses))
        _write(args, emit_sat(inst))
        return EXIT_OK
    if fam == "complete":
        g = gen_complete(args.n)
    elif fam == "bipartite":
        g = gen_complete_bipartite(args.m, args.n)
    elif fam == "double-k12":
        g = gen_double_k12()
    elif fam == "cycle":
        g = gen_cycle(args.n)
    elif fam == "petersen":
        g = gen_petersen()
    elif fam == "random":
        g = gen_random(args.n, args.p, random.Random(args.seed))
    elif fam == "reduction":
        inst = parse_sat(_read(args.sat))
        g = reduce(inst, args.kblock.upper()).graph
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown family {fam}")
    _write(args, emit_edgelist(g))
    return EXIT_OK


# ---- bounds --------------------------------------------------------------

def cmd_bounds(args) -> int:
    g = parse_edgelist(_read(args.graph))
    print(_bounds.bounds_report(g).format())
    return EXIT_OK


# ---- split ---------------------------------------------------------------

def _columns(g: Graph) -> SplitCertificate:
    parts = _bounds.complete_bipartite_parts(g)
    if parts is None:
        raise InputError("columns method needs a complete bipartite graph")
    even = [p for p in parts if len(p) % 2 == 0]
    if not even:
        raise InputError("columns method needs a side of even size")
    return split_complete_bipartite(g, min(even, key=len))


def _exact(g: Graph, args) -> tuple[int, SplitCertificate | None]:
    budget = SearchBudget(args.budget_nodes, args.budget_seconds)
    levels = [args.k] if args.k else range(1, max(1, (g.max_degree() + 1) // 2) + 1)
    for k in levels:
        out = find_k_split(g, k, budget)
        _err(f"k={k}: {out.status.value} after {out.nodes_explored} nodes")
        if out.status is Status.FOUND:
            return EXIT_OK, out.certificate
        if out.status is Status.EXHAUSTED:
            return EXIT_EXHAUSTED, None
    return EXIT_REJECT, None


def cmd_split(args) -> int:
    text = _read(args.graph)
    m = args.method
    if m == "torus":
        cert = split_torus(parse_torus(text))
    elif m == "projective":
        cert = split_projective(parse_signed(text))
    else:
        g = parse_edgelist(text)
        if m == "exact":
            code, cert = _exact(g, args)
            if cert is None:
                return code
        elif m == "degree":
            cert = split_by_degree(g)
        elif m == "columns":
            cert = _columns(g)
        else:
            cert = split_by_pseudoforests(g)
    if args.k and m != "exact" and cert.max_copies > args.k:
        _err(f"{m} split uses {cert.max_copies} copies, more than k={args.k}")
        return EXIT_REJECT
    _write(args, emit_certificate(cert))
    return EXIT_OK


# ---- verify --------------------------------------------------------------

def cmd_verify(args) -> int:
    cert = parse_certificate(_read(args.certificate))
    k = args.k if args.k else cert.max_copies
    verdict = verify_certificate(cert, k)
    ok = verdict.ok
    for p in verdict.problems:
        _err(f"{p.code.value}: {p.detail}")
    for flag, check in ((args.empire, check_empire_conditions), (args.quad, check_quadrangulation_conditions)):
        if flag:
            rep = check(cert)
            print(f"vertices {rep.vertices} edges {rep.edges} faces {rep.faces} "
                  f"face lengths {sorted(set(rep.face_lengths))}")
            if not rep.ok:
                ok = False
                _err(f"rigid conditions failed: all_split={rep.all_split} "
                     f"regular_faces={rep.regular_faces} faces_separate={rep.faces_separate}")
    print(f"{'accept' if ok else 'reject'} k={k}")
    return EXIT_OK if ok else EXIT_REJECT


# ---- draw ----------------------------------------------------------------

def cmd_draw(args) -> int:
    text = _read(args.input)
    if text.lstrip().startswith("{"):
        svg = draw_certificate(parse_certificate(text))
    else:
        svg = draw_graph(parse_edgelist(text))
    _write(args, svg)
    return EXIT_OK


# ---- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splitthick", description="Planar split thickness toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output")
    gen = sub.add_parser("gen", help="generate a graph or SAT instance")
    fams = gen.add_subparsers(dest="family", required=True)
    fams.add_parser("complete", parents=[out]).add_argument("n", type=int)
    p = fams.add_parser("bipartite", parents=[out])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    fams.add_parser("double-k12", parents=[out])
    fams.add_parser("cycle", parents=[out]).add_argument("n", type=int)
    fams.add_parser("petersen", parents=[out])
    p = fams.add_parser("random", parents=[out])
    p.add_argument("n", type=int)
    p.add_argument("p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p = fams.add_parser("reduction", parents=[out])
    p.add_argument("--sat", required=True)
    p.add_argument("--kblock", choices=["k12", "k78", "K12", "K78"], default="k12")
    p = fams.add_parser("sat", parents=[out], help="random planar cycle 3-SAT instance")
    p.add_argument("--vars", type=int, default=5)
    p.add_argument("--clauses", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=cmd_gen)

    b = sub.add_parser("bounds", help="lower and upper bounds with reasons")
    b.add_argument("graph")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("split", help="produce a split certificate")
    s.add_argument("graph")
    s.add_argument("--method", required=True,
                   choices=["degree", "columns", "torus", "projective", "pseudoforest", "exact"])
    s.add_argument("-k", type=int)
    s.add_argument("--budget-nodes", type=int, default=10_000_000)
    s.add_argument("--budget-seconds", type=float, default=60.0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_split)

    v = sub.add_parser("verify", help="check a certificate")
    v.add_argument("certificate")
    v.add_argument("-k", type=int)
    v.add_argument("--empire", action="store_true", help="also check the triangulation conditions")
    v.add_argument("--quad", action="store_true", help="also check the quadrangulation conditions")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("draw", help="SVG drawing of a planar graph or split graph")
    d.add_argument("input")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_draw)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "k", None) is not None and args.k < 1:
        _err("error: -k must be positive")
        return EXIT_INPUT
    try:
        return args.func(args)
    except (ParseError, InputError, InvalidEmbeddingError, NonPlanarError, ValueError, RuntimeError) as exc:
        _err(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
