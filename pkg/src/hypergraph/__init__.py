"""Hypergraph module"""
from src.hypergraph.core import (
    Hypergraph,
    IncidenceMatrix,
    DegreeVectors,
    ValidationReport,
    Violation,
    validate,
    ensure_valid,
    build_incidence,
    compute_degrees,
    connected_components,
)
from src.hypergraph.generation import (
    SampleMatrix,
    NeighborhoodSpec,
    as_samples,
    pairwise_sq_distances,
    nearest_neighbors,
    knn_hyperedges,
    multi_k_hyperedges,
)
from src.hypergraph.io import read_hypergraph, write_hypergraph, parse_hypergraph, format_hypergraph

__all__ = [
    "Hypergraph",
    "IncidenceMatrix",
    "DegreeVectors",
    "ValidationReport",
    "Violation",
    "validate",
    "ensure_valid",
    "build_incidence",
    "compute_degrees",
    "connected_components",
    "SampleMatrix",
    "NeighborhoodSpec",
    "as_samples",
    "pairwise_sq_distances",
    "nearest_neighbors",
    "knn_hyperedges",
    "multi_k_hyperedges",
    "read_hypergraph",
    "write_hypergraph",
    "parse_hypergraph",
    "format_hypergraph"
]
