"""Exact total [1,2]-domination: solvers, graph families and claim verification."""

from .enumeration import (
    are_isomorphic,
    canonical_code,
    canonical_form,
    enumerate_connected_graphs,
    enumerate_graphs,
    enumerate_isolated_free_graphs,
    enumerate_trees,
)
from .families import FamilyError, FamilySpec
from .graph import Graph, GraphError, VertexSet, graph_from_edges
from .graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6
from .solvers import INFINITE, Kind, SolveResult, TheoremViolation, oracle_minimum, solve

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "graph_from_edges",
    "Graph6Error",
    "parse_graph6",
    "emit_graph6",
    "read_graph6",
    "canonical_code",
    "canonical_form",
    "are_isomorphic",
    "enumerate_graphs",
    "enumerate_connected_graphs",
    "enumerate_isolated_free_graphs",
    "enumerate_trees",
    "FamilySpec",
    "FamilyError",
    "Kind",
    "INFINITE",
    "SolveResult",
    "TheoremViolation",
    "solve",
    "oracle_minimum",
]
