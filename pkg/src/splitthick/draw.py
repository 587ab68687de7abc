"""Straight-line drawings of planar graphs and split graphs as SVG."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import networkx as nx
import numpy as np

from .certificate import SplitCertificate
from .graph import Graph
from .planarity import NonPlanarError, embed, faces, is_planar

Point = tuple[float, float]


@dataclass(frozen=True)
class Layout:
    pos: dict[int, Point]
    method: str          # "barycentric" or "planar-fallback"


@dataclass(frozen=True)
class SvgStyle:
    size: float = 600.0
    margin: float = 30.0
    radius: float = 7.0
    stroke: str = "#333"
    labels: bool = True


def _is_3_connected(g: Graph) -> bool:
    if g.n < 4 or g.m < 6:
        return False
    return nx.node_connectivity(g.to_networkx()) >= 3


def tutte_layout(g: Graph) -> dict[int, Point]:
    """Barycentric placement with the longest face pinned to a circle.

    Crossing-free when g is planar and 3-connected.
    """
    fl = faces(embed(g))
    # 3-connected: every face is a simple cycle, so the walk tails are its vertices in order
    outer = [a for a, _ in max(fl.faces, key=lambda f: (len(f.walk), f.walk)).walk]
    pos = np.zeros((g.n, 2))
    for t, v in enumerate(outer):
        a = 2 * math.pi * t / len(outer)
        pos[v] = (math.cos(a), math.sin(a))
    fixed = set(outer)
    inner = [v for v in g.vertices if v not in fixed]
    if inner:
        at = {v: t for t, v in enumerate(inner)}
        lap = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            r = at[v]
            lap[r, r] = g.degree(v)
            for w in g.neighbors(v):
                if w in fixed:
                    rhs[r] += pos[w]
                else:
                    lap[r, at[w]] -= 1
        pos[inner] = np.linalg.solve(lap, rhs)
    return {v: (float(pos[v, 0]), float(pos[v, 1])) for v in g.vertices}


def layout(g: Graph) -> Layout:
    """Crossing-free straight-line positions for a planar graph."""
    if not is_planar(g):
        raise NonPlanarError("cannot draw a non-planar graph without crossings")
    if _is_3_connected(g):
        return Layout(tutte_layout(g), "barycentric")
    nxpos = nx.planar_layout(g.to_networkx())
    return Layout({v: (float(nxpos[v][0]), float(nxpos[v][1])) for v in g.vertices}, "planar-fallback")


def _proper_cross(p, q, r, s) -> bool:
    def orient(a, b, c):
        d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return 0 if abs(d) < 1e-12 else (1 if d > 0 else -1)
    return (orient(p, q, r) * orient(p, q, s) < 0) and (orient(r, s, p) * orient(r, s, q) < 0)


def count_crossings(g: Graph, pos: dict[int, Point]) -> int:
    """Pairs of vertex-disjoint edges whose segments cross properly."""
    es = g.sorted_edges
    count = 0
    for i, (a, b) in enumerate(es):
        for c, d in es[i + 1:]:
            if len({a, b, c, d}) == 4 and _proper_cross(pos[a], pos[b], pos[c], pos[d]):
                count += 1
    return count


def palette(k: int) -> list[str]:
    # golden-angle hues stay distinguishable for a few dozen classes
    return [f"hsl({(137.508 * i) % 360:.1f},65%,60%)" for i in range(k)]


def render_svg(g: Graph, pos: dict[int, Point], colour_class: list[int] | None = None,
               labels: list[str] | None = None, style: SvgStyle = SvgStyle()) -> str:
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (style.size - 2 * style.margin) / span

    def xy(v):
        x, y = pos[v]
        return style.margin + (x - min(xs)) * scale, style.margin + (max(ys) - y) * scale

    classes = colour_class if colour_class is not None else list(g.vertices)
    colours = palette(max(classes, default=-1) + 1)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.size:g}" height="{style.size:g}" '
           f'viewBox="0 0 {style.size:g} {style.size:g}">',
           f'<g stroke="{style.stroke}" stroke-width="1.5">']
    for u, v in g.sorted_edges:
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    out.append('<g stroke="#000" stroke-width="1">')
    for v in g.vertices:
        x, y = xy(v)
        name = labels[v] if labels else str(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{style.radius:g}" fill="{colours[classes[v]]}">'
                   f"<title>{escape(name)}</title></circle>")
    out.append("</g>")
    if style.labels:
        out.append('<g font-family="sans-serif" font-size="9" text-anchor="middle">')
        for v in g.vertices:
            x, y = xy(v)
            name = labels[v] if labels else str(v)
            out.append(f'<text x="{x:.2f}" y="{y - style.radius - 2:.2f}">{escape(name)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def draw_graph(g: Graph, style: SvgStyle = SvgStyle()) -> str:
    return render_svg(g, layout(g).pos, style=style)


def draw_certificate(cert: SplitCertificate, style: SvgStyle = SvgStyle()) -> str:
    """Draw the split graph; copies of one original vertex share a colour."""
    sg, copies = cert.split_graph()
    return render_svg(sg, layout(sg).pos, [v for v, _ in copies],
                      [f"{v}.{i}" for v, i in copies], style)
