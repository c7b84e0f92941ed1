"""Optimal radio labelings of the torus graphs C_n x C_n."""
from .constructions import build_labeling, lower_bound, min_gap, rn_formula
from .errors import DomainError, UnsupportedOrderError
from .radio_core import Labeling, ViolationReport, greedy_span_for_ordering, span, verify_full, verify_pruned
from .torus_graph import Torus, TorusVertex, all_vertices, diameter, torus_distance

__all__ = [
    "DomainError",
    "Labeling",
    "Torus",
    "TorusVertex",
    "UnsupportedOrderError",
    "ViolationReport",
    "all_vertices",
    "build_labeling",
    "diameter",
    "greedy_span_for_ordering",
    "lower_bound",
    "min_gap",
    "rn_formula",
    "span",
    "torus_distance",
    "verify_full",
    "verify_pruned",
]
