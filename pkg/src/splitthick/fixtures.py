"""Loaders for the bundled fixture files in ``splitthick/data``."""

from __future__ import annotations

from importlib import resources

from .certificate import SplitCertificate
from .hardness import SatInstance
from .io import parse_certificate, parse_sat, parse_signed, parse_torus
from .splitters import SignedGraph, TorusDrawing


def fixture_text(name: str) -> str:
    return (resources.files("splitthick") / "data" / name).read_text()


def k12_certificate() -> SplitCertificate:
    """Rigid 2-split of K_12: a triangulation on 24 vertices."""
    return parse_certificate(fixture_text("k12_2split.json"))


def k78_certificate() -> SplitCertificate:
    """Rigid 2-split of K_{7,8}: a quadrangulation on 30 vertices."""
    return parse_certificate(fixture_text("k78_2split.json"))


def block_certificate(kblock: str) -> SplitCertificate:
    return {"K12": k12_certificate, "K78": k78_certificate}[kblock]()


def torus_drawing(name: str = "k7") -> TorusDrawing:
    return parse_torus(fixture_text(f"{name}.torus"))


def signed_graph(name: str = "k6") -> SignedGraph:
    return parse_signed(fixture_text(f"{name}.signed"))


def worked_instance() -> SatInstance:
    return parse_sat(fixture_text("worked.cnf"))
