"""Delta-list-colouring of graphs of maximum degree Delta other than K_{Delta+1}."""

from .checking import SearchLimitExceeded, Violation, solve_exact, verify_coloring
from .chooser import (
    Infeasible,
    InvariantError,
    NotApplicable,
    Outcome,
    Reason,
    Success,
    TraceCounters,
    list_color,
)
from .graph import Graph, GraphError, build_graph, connected_components, induced_subgraph, is_complete, max_degree

__all__ = [
    "Graph", "GraphError", "build_graph", "connected_components", "induced_subgraph",
    "is_complete", "max_degree",
    "list_color", "Outcome", "Success", "Infeasible", "NotApplicable", "Reason",
    "TraceCounters", "InvariantError",
    "verify_coloring", "solve_exact", "Violation", "SearchLimitExceeded",
]
