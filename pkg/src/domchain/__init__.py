"""Exact domination-chain parameters, graph families, induced-subgraph checks and Ramsey audits."""

from .graph import (
    BipartiteView,
    Graph,
    Graph6Error,
    GraphError,
    NotBipartiteError,
    emit_graph6,
    from_edge_list,
    parse_edge_list,
    parse_graph6,
)
from .families import FamilySpec, generate, oracle_value, parse_spec
from .hfree import ForbiddenFamily, contains_bistar_variant, contains_induced, family_leq, is_family_free
from .solvers import PARAMS, ParameterReport, SolverError, compute, full_report

__version__ = "0.1.0"

__all__ = [
    "BipartiteView",
    "Graph",
    "Graph6Error",
    "GraphError",
    "NotBipartiteError",
    "emit_graph6",
    "from_edge_list",
    "parse_edge_list",
    "parse_graph6",
    "FamilySpec",
    "generate",
    "oracle_value",
    "parse_spec",
    "ForbiddenFamily",
    "contains_bistar_variant",
    "contains_induced",
    "family_leq",
    "is_family_free",
    "PARAMS",
    "ParameterReport",
    "SolverError",
    "compute",
    "full_report",
]
