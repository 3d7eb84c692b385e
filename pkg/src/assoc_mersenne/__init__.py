"""Associated Mersenne graphs and their relatives among induced hypercube subgraphs."""

from .bitstring import Family, Run, circular_runs, hamming, is_member, runs, weight
from .families import (
    VertexSet,
    build_M_recursive,
    build_R_recursive,
    enumerate_family,
    lucas_restricted,
    phi,
    phi_inverse,
    rotation_closure,
)
from .graph import Graph, build_graph, degree_sequence, edge_count, export_dot
from .metrics import MetricSummary, metric_summary
from .sequences import assoc_mersenne, fib, lucas

__all__ = [
    "Family", "Run", "circular_runs", "hamming", "is_member", "runs", "weight",
    "VertexSet", "build_M_recursive", "build_R_recursive", "enumerate_family",
    "lucas_restricted", "phi", "phi_inverse", "rotation_closure",
    "Graph", "build_graph", "degree_sequence", "edge_count", "export_dot",
    "MetricSummary", "metric_summary", "assoc_mersenne", "fib", "lucas",
]
