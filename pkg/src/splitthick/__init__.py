"""Planar split thickness: certificates, bounds, constructive splitters,
exact search for small graphs, and a 2-split hardness reduction."""

from .bounds import (ThicknessBounds, bipartite_2splittable, bounds_report, complete_thickness,
                     eq2_feasible, lb_euler)
from .certificate import SplitCertificate, Verdict, Violation, identity_certificate, verify_certificate
from .exact import SearchBudget, SearchOutcome, Status, find_k_split, split_thickness_exact
from .graph import Graph, gen_complete, gen_complete_bipartite, gen_double_k12
from .hardness import SatInstance, build_witness, reduce, validate_instance
from .planarity import check_empire_conditions, check_quadrangulation_conditions, embed, faces, is_planar
from .splitters import (pseudoarboricity, split_by_degree, split_by_pseudoforests, split_projective,
                        split_torus)

__all__ = [
    "Graph", "gen_complete", "gen_complete_bipartite", "gen_double_k12",
    "SplitCertificate", "Verdict", "Violation", "identity_certificate", "verify_certificate",
    "is_planar", "embed", "faces", "check_empire_conditions", "check_quadrangulation_conditions",
    "ThicknessBounds", "bounds_report", "lb_euler", "complete_thickness", "bipartite_2splittable",
    "eq2_feasible",
    "split_by_degree", "split_torus", "split_projective", "split_by_pseudoforests", "pseudoarboricity",
    "SearchBudget", "SearchOutcome", "Status", "find_k_split", "split_thickness_exact",
    "SatInstance", "validate_instance", "reduce", "build_witness",
]
