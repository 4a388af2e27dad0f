"""
Hypergraph Laplacians - clique expansion, star expansion and Zhou's normalized Laplacian

Zero degrees get a zero entry in every D^(-1/2) or D^(-1), so isolated
vertices end up with an identity row.
"""
from dataclasses import dataclass

import numpy as np
import scipy.sparse

from src.hypergraph.core import Hypergraph, build_incidence, compute_degrees


@dataclass(frozen=True, eq=False)
class LaplacianMatrix:
    """Symmetric |V| x |V| Laplacian tagged with the framework that built it"""
    entries: np.ndarray
    framework: str

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True, eq=False)
class ExpandedGraph:
    """Pairwise graph obtained from a hypergraph expansion"""
    adjacency: np.ndarray

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)


def _pinv_diag(values: np.ndarray, power: float) -> np.ndarray:
    """values**(-power) with zeros kept at zero"""
    values = np.asarray(values, dtype=np.float64)
    out = np.zeros_like(values)
    positive = values > 0
    out[positive] = values[positive] ** (-power)
    return out


def _normalized(theta: np.ndarray, framework: str) -> LaplacianMatrix:
    """L = I - theta, symmetrized"""
    n = theta.shape[0]
    laplacian = np.eye(n) - theta
    return LaplacianMatrix(entries=0.5 * (laplacian + laplacian.T), framework=framework)


def clique_graph(g: Hypergraph) -> ExpandedGraph:
    """
    Clique expansion: w_c(u,v) = sum of w(e) over hyperedges holding both u and v

    The fixed scalar of the expansion is 1 (the normalized Laplacian is invariant to it).
    """
    incidence = build_incidence(g).entries
    adjacency = (incidence @ scipy.sparse.diags(g.weights) @ incidence.T).toarray()
    np.fill_diagonal(adjacency, 0.0)
    return ExpandedGraph(adjacency=adjacency)


def normalized_graph_laplacian(adjacency: np.ndarray) -> np.ndarray:
    """I - D^(-1/2) A D^(-1/2) for a symmetric non-negative adjacency"""
    adjacency = np.asarray(adjacency, dtype=np.float64)
    scale = _pinv_diag(adjacency.sum(axis=1), 0.5)
    laplacian = np.eye(adjacency.shape[0]) - scale[:, None] * adjacency * scale[None, :]
    return 0.5 * (laplacian + laplacian.T)


def clique_expansion(g: Hypergraph) -> LaplacianMatrix:
    """Normalized Laplacian of the clique-expanded graph"""
    graph = clique_graph(g)
    return LaplacianMatrix(entries=normalized_graph_laplacian(graph.adjacency), framework="clique")


def star_weights(g: Hypergraph) -> scipy.sparse.csc_matrix:
    """M(u,e) = w(e)/delta(e) for u in e"""
    incidence = build_incidence(g).entries
    degrees = compute_degrees(g)
    scale = g.weights / np.maximum(degrees.edge_degrees, 1)
    return (incidence @ scipy.sparse.diags(scale)).tocsc()


def star_expansion(g: Hypergraph) -> LaplacianMatrix:
    """L_* = I - D_*v^(-1/2) M D_*e^(-1) M^T D_*v^(-1/2)"""
    m = star_weights(g)
    vertex_scale = _pinv_diag(np.asarray(m.sum(axis=1)).reshape(-1), 0.5)
    edge_scale = _pinv_diag(np.asarray(m.sum(axis=0)).reshape(-1), 1.0)

    walk = (m @ scipy.sparse.diags(edge_scale) @ m.T).toarray()
    theta = vertex_scale[:, None] * walk * vertex_scale[None, :]
    return _normalized(theta, "star")


def zhou_laplacian(g: Hypergraph) -> LaplacianMatrix:
    """L_z = I - D_v^(-1/2) H W D_e^(-1) H^T D_v^(-1/2)"""
    incidence = build_incidence(g).entries
    degrees = compute_degrees(g)
    vertex_scale = _pinv_diag(degrees.vertex_degrees, 0.5)
    edge_scale = g.weights * _pinv_diag(degrees.edge_degrees, 1.0)

    walk = (incidence @ scipy.sparse.diags(edge_scale) @ incidence.T).toarray()
    theta = vertex_scale[:, None] * walk * vertex_scale[None, :]
    return _normalized(theta, "zhou")
