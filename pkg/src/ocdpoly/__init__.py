"""Exact counting of outer-connected dominating sets and their polynomial."""
from .engine import (
    EnumerationStats,
    GuardError,
    Verdict,
    check_set,
    enumerate_connected_induced_subgraphs,
    iter_ocd_sets,
    min_ocd_number,
    ocd_polynomial,
    ocd_polynomial_bruteforce,
    ocd_polynomial_fast,
)
from .families import GraphFamily, build, family_polynomial
from .graph import (
    Graph,
    GraphFormatError,
    is_connected_induced,
    is_dominating,
    is_ocd_set,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    vset,
)
from .polynomial import OcdPolynomial

__all__ = [
    "EnumerationStats", "Graph", "GraphFamily", "GraphFormatError", "GuardError",
    "OcdPolynomial", "Verdict", "build", "check_set", "enumerate_connected_induced_subgraphs",
    "family_polynomial", "is_connected_induced", "is_dominating", "is_ocd_set", "iter_ocd_sets",
    "min_ocd_number", "ocd_polynomial", "ocd_polynomial_bruteforce", "ocd_polynomial_fast",
    "parse_edge_list", "parse_graph6", "to_graph6", "vset",
]
