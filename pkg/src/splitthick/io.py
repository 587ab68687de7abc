"""Text file formats: edge lists, certificates (JSON), torus drawings,
signed graphs and DIMACS-style SAT instances with a clause-cycle line."""

from __future__ import annotations

import json
from typing import Any

from .certificate import SplitCertificate
from .graph import Graph
from .hardness import SatInstance
from .splitters import SignedGraph, TorusDrawing


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = f"line {line}: " if line is not None else f"{field}: " if field else ""
        super().__init__(where + message)
        self.line = line
        self.field = field


def _lines(text: str, comment: str = "#"):
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith(comment):
            yield no, s.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", no) from None


def _header(rows, kind: str) -> int:
    try:
        no, toks = next(rows)
    except StopIteration:
        raise ParseError(f"empty {kind} file: missing 'n <count>' header", 1) from None
    if len(toks) != 2 or toks[0] != "n":
        raise ParseError("expected header 'n <vertex-count>'", no)
    n = _int(toks[1], no, "vertex count")
    if n < 0:
        raise ParseError("vertex count must be non-negative", no)
    return n


def _pair(toks, no: int, n: int) -> tuple[int, int]:
    u, v = _int(toks[0], no, "vertex"), _int(toks[1], no, "vertex")
    for x in (u, v):
        if not 0 <= x < n:
            raise ParseError(f"vertex {x} outside 0..{n - 1}", no)
    if u == v:
        raise ParseError(f"self-loop at {u}", no)
    return (u, v) if u < v else (v, u)


def _add(edges: dict, e, no: int, value=None):
    if e in edges:
        raise ParseError(f"duplicate edge {e}", no)
    edges[e] = value


# ---- edge lists ----------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    rows = _lines(text)
    n = _header(rows, "edge list")
    edges: dict = {}
    for no, toks in rows:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", no)
        _add(edges, _pair(toks, no, n), no)
    return Graph(n, frozenset(edges))


def emit_edgelist(g: Graph, comment: str | None = None) -> str:
    out = [f"# {line}" for line in comment.splitlines()] if comment else []
    out.append(f"n {g.n}")
    out += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(out) + "\n"


# ---- torus drawings ------------------------------------------------------

def parse_torus(text: str) -> TorusDrawing:
    rows = _lines(text)
    n = _header(rows, "torus")
    wrap: dict = {}
    coords: dict[int, tuple[float, float]] = {}
    for no, toks in rows:
        if toks[0] == "pos":
            if len(toks) != 4:
                raise ParseError("position line must be 'pos u x y'", no)
            u = _int(toks[1], no, "vertex")
            if not 0 <= u < n:
                raise ParseError(f"vertex {u} outside 0..{n - 1}", no)
            try:
                x, y = float(toks[2]), float(toks[3])
            except ValueError:
                raise ParseError("coordinates must be numbers", no) from None
            if not (0 <= x < 1 and 0 <= y < 1):
                raise ParseError("coordinates must lie in [0, 1)", no)
            coords[u] = (x, y)
            continue
        if len(toks) != 4:
            raise ParseError("edge line must be 'u v wx wy'", no)
        u, v = _int(toks[0], no, "vertex"), _int(toks[1], no, "vertex")
        e = _pair(toks, no, n)
        wx, wy = _int(toks[2], no, "wx"), _int(toks[3], no, "wy")
        if abs(wx) > 1 or abs(wy) > 1:
            raise ParseError("wrap entries must be -1, 0 or 1", no)
        if u > v:
            wx, wy = -wx, -wy
        _add(wrap, e, no, (wx, wy))
    g = Graph(n, frozenset(wrap))
    return TorusDrawing(g, wrap, coords or None)


def emit_torus(d: TorusDrawing) -> str:
    out = [f"n {d.graph.n}"]
    out += [f"{u} {v} {d.wrap[(u, v)][0]} {d.wrap[(u, v)][1]}" for u, v in d.graph.sorted_edges]
    if d.coords:
        out += [f"pos {v} {x!r} {y!r}" for v, (x, y) in sorted(d.coords.items())]
    return "\n".join(out) + "\n"


# ---- signed graphs -------------------------------------------------------

def parse_signed(text: str) -> SignedGraph:
    rows = _lines(text)
    n = _header(rows, "signed graph")
    sign: dict = {}
    for no, toks in rows:
        if len(toks) != 3 or toks[2] not in ("+", "-"):
            raise ParseError("edge line must be 'u v +' or 'u v -'", no)
        _add(sign, _pair(toks, no, n), no, 1 if toks[2] == "+" else -1)
    return SignedGraph(Graph(n, frozenset(sign)), sign)


def emit_signed(sg: SignedGraph) -> str:
    out = [f"n {sg.graph.n}"]
    out += [f"{u} {v} {'+' if sg.sign[(u, v)] == 1 else '-'}" for u, v in sg.graph.sorted_edges]
    return "\n".join(out) + "\n"


# ---- SAT instances -------------------------------------------------------

def parse_sat(text: str) -> SatInstance:
    nvars = nclauses = None
    clauses: list[tuple[int, ...]] = []
    cycle = None
    for no, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] in ("c", "%"):
            continue
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "cnf":
                raise ParseError("problem line must be 'p cnf <vars> <clauses>'", no)
            nvars, nclauses = _int(toks[2], no, "variable count"), _int(toks[3], no, "clause count")
            continue
        if toks[0] == "cy":
            if cycle is not None:
                raise ParseError("more than one 'cy' line", no)
            cycle = tuple(_int(t, no, "clause number") - 1 for t in toks[1:])
            continue
        if nvars is None:
            raise ParseError("clause before the 'p cnf' line", no)
        lits = [_int(t, no, "literal") for t in toks]
        if lits[-1] != 0 or 0 in lits[:-1]:
            raise ParseError("clause line must be nonzero literals terminated by 0", no)
        lits = lits[:-1]
        if len(lits) != 3:
            raise ParseError(f"clause must have exactly 3 literals, got {len(lits)}", no)
        if any(abs(x) > nvars for x in lits):
            raise ParseError(f"literal outside 1..{nvars}", no)
        clauses.append(tuple(lits))
    if nvars is None:
        raise ParseError("missing 'p cnf' line", 1)
    if len(clauses) != nclauses:
        raise ParseError(f"header declares {nclauses} clauses, found {len(clauses)}", field="p")
    if cycle is None:
        cycle = tuple(range(len(clauses)))
    return SatInstance(nvars, tuple(clauses), cycle)


def emit_sat(inst: SatInstance) -> str:
    out = [f"p cnf {inst.num_vars} {len(inst.clauses)}"]
    out += [" ".join(map(str, c)) + " 0" for c in inst.clauses]
    out.append("cy " + " ".join(str(j + 1) for j in inst.clause_cycle))
    return "\n".join(out) + "\n"


# ---- certificates --------------------------------------------------------

def _expect_int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {x!r}", field=where)
    return x


def certificate_to_json(cert: SplitCertificate) -> dict:
    return {
        "base": {"n": cert.base.n, "edges": [list(e) for e in cert.base.sorted_edges]},
        "copies": {str(v): k for v, k in enumerate(cert.copies)},
        "edges": [[list(a), list(b)] for a, b in cert.edges],
    }


def emit_certificate(cert: SplitCertificate) -> str:
    d = certificate_to_json(cert)
    # one split edge per line keeps fixtures diffable
    edges = ",\n    ".join(json.dumps(e) for e in d["edges"])
    base_edges = json.dumps(d["base"]["edges"])
    copies = json.dumps(d["copies"])
    return (f'{{\n  "base": {{"n": {d["base"]["n"]}, "edges": {base_edges}}},\n'
            f'  "copies": {copies},\n  "edges": [\n    {edges}\n  ]\n}}\n')


def certificate_from_json(d: Any) -> SplitCertificate:
    if not isinstance(d, dict):
        raise ParseError("top level must be an object", field="$")
    for key in ("base", "copies", "edges"):
        if key not in d:
            raise ParseError("missing key", field=key)
    base = d["base"]
    if not isinstance(base, dict) or "n" not in base or "edges" not in base:
        raise ParseError("base must be an object with 'n' and 'edges'", field="base")
    n = _expect_int(base["n"], "base.n")
    bedges = []
    for t, e in enumerate(base["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("expected [u, v]", field=f"base.edges[{t}]")
        bedges.append((_expect_int(e[0], f"base.edges[{t}][0]"), _expect_int(e[1], f"base.edges[{t}][1]")))
    try:
        g = Graph.from_edges(n, bedges)
    except ValueError as exc:
        raise ParseError(str(exc), field="base.edges") from None
    copies_in = d["copies"]
    if not isinstance(copies_in, dict):
        raise ParseError("copies must map vertex -> count", field="copies")
    copies = [1] * n
    for key, val in copies_in.items():
        try:
            v = int(key)
        except ValueError:
            raise ParseError(f"bad vertex key {key!r}", field="copies") from None
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} outside 0..{n - 1}", field=f"copies.{key}")
        copies[v] = _expect_int(val, f"copies.{key}")
    edges = []
    for t, e in enumerate(d["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("expected [[u, i], [v, j]]", field=f"edges[{t}]")
        pair = []
        for s, c in enumerate(e):
            if not isinstance(c, list) or len(c) != 2:
                raise ParseError("expected [vertex, copy-index]", field=f"edges[{t}][{s}]")
            pair.append((_expect_int(c[0], f"edges[{t}][{s}][0]"), _expect_int(c[1], f"edges[{t}][{s}][1]")))
        edges.append(tuple(pair))
    return SplitCertificate(g, tuple(copies), tuple(edges))


def parse_certificate(text: str) -> SplitCertificate:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} (column {exc.colno})", exc.lineno) from None
    return certificate_from_json(d)
