"""Hypergraph Laplacian module"""
from src.laplacian.frameworks import (
    LaplacianMatrix,
    ExpandedGraph,
    clique_graph,
    clique_expansion,
    normalized_graph_laplacian,
    star_weights,
    star_expansion,
    zhou_laplacian,
)
from src.laplacian.factory import LaplacianFactory

__all__ = [
    "LaplacianMatrix",
    "ExpandedGraph",
    "clique_graph",
    "clique_expansion",
    "normalized_graph_laplacian",
    "star_weights",
    "star_expansion",
    "zhou_laplacian",
    "LaplacianFactory"
]
