"""
Spectral embedding and k-means clustering on a hypergraph Laplacian
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from sklearn.cluster import KMeans

from config.settings import settings
from src.laplacian.frameworks import LaplacianMatrix
from src.numerics.kernels import (
    EigenResult,
    largest_eigenvalue,
    symmetric_eigen,
    zero_threshold,
)
from src.utils.errors import ParameterError, RankError
from src.utils.logger import app_logger


@dataclass(frozen=True, eq=False)
class Embedding:
    """
    Spectral coordinates of the vertices

    Column j is the eigenvector of the j-th smallest nonzero eigenvalue.
    """
    coordinates: np.ndarray
    eigenvalues: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.coordinates.shape[1])


@dataclass(frozen=True, eq=False)
class ClusterAssignment:
    """k-means result: labels renumbered by first appearance, and the within-cluster sum of squares"""
    labels: np.ndarray
    inertia: float


def _entries(l) -> np.ndarray:
    return l.entries if isinstance(l, LaplacianMatrix) else np.asarray(l, dtype=np.float64)


def _growing_eigen(s: np.ndarray, count: int, threshold: float, enough) -> EigenResult:
    """
    Request more eigenpairs (doubling) until enough(result) holds or the spectrum is exhausted
    """
    n = s.shape[0]
    count = min(n, count)
    while True:
        result = symmetric_eigen(s, count)
        if enough(result) or count == n:
            return result
        app_logger.debug(f"[EIGEN] {count} eigenpairs not enough above {threshold:.3e}; doubling")
        count = min(n, 2 * count)


def spectral_embed(l, m: int) -> Embedding:
    """
    Embed vertices with the m smallest nonzero eigenvectors of L

    Args:
        l: LaplacianMatrix (or symmetric array)
        m: Embedding dimension, 1 <= m < |V|

    Returns:
        Embedding with orthonormal columns
    """
    s = _entries(l)
    n = s.shape[0]
    if m < 1 or m >= n:
        raise ParameterError(f"embedding dimension must lie in [1, {n - 1}], got {m}")

    threshold = zero_threshold(largest_eigenvalue(s))
    result = _growing_eigen(
        s, m + 1, threshold, lambda r: int(np.sum(r.eigenvalues > threshold)) >= m
    )
    nonzero = np.flatnonzero(result.eigenvalues > threshold)
    zero_count = int(np.sum(result.eigenvalues <= threshold))
    if nonzero.size < m:
        raise RankError(
            f"only {nonzero.size} nonzero eigenvalues for a {m}-dimensional embedding "
            f"({zero_count} zero eigenvalues, i.e. {zero_count} components)",
            zero_count=zero_count,
        )

    columns = nonzero[:m]
    app_logger.debug(
        f"[EIGEN] embedding with eigenvalues {np.round(result.eigenvalues[columns], 6).tolist()}"
    )
    return Embedding(
        coordinates=result.eigenvectors[:, columns],
        eigenvalues=result.eigenvalues[columns],
    )


def canonical_labels(labels) -> np.ndarray:
    """Renumber cluster ids 0, 1, 2, ... in order of first appearance"""
    labels = np.asarray(labels)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.reshape(-1)]


def kmeans(points, k: int, seed: int = None, restarts: int = None) -> ClusterAssignment:
    """
    k-means with k-means++ seeding, keeping the restart of lowest inertia

    Args:
        points: n x m matrix (a 1-D array is treated as n x 1)
        k: Number of clusters, k <= n
        seed: Random seed
        restarts: Number of k-means++ initializations

    Returns:
        ClusterAssignment
    """
    points = np.asarray(points, dtype=np.float64)
    if points.ndim == 1:
        points = points.reshape(-1, 1)
    n = points.shape[0]
    if k < 1 or k > n:
        raise ParameterError(f"cannot form {k} clusters from {n} points")
    restarts = settings.KMEANS_RESTARTS if restarts is None else restarts
    if restarts < 1:
        raise ParameterError(f"restarts must be positive, got {restarts}")

    model = KMeans(
        n_clusters=k,
        init="k-means++",
        n_init=restarts,
        max_iter=settings.KMEANS_MAX_ITER,
        tol=settings.KMEANS_TOL,
        random_state=settings.DEFAULT_SEED if seed is None else seed,
    )
    model.fit(points)
    return ClusterAssignment(labels=canonical_labels(model.labels_), inertia=float(model.inertia_))


def cluster_embedding(l, num_classes: int) -> np.ndarray:
    """
    Row-normalized spectral coordinates used for clustering

    With at most one zero eigenvalue these are the num_classes smallest nonzero
    eigenvectors. With z >= 2 zero eigenvalues the z zero-eigenspace vectors come
    first, then nonzero eigenvectors up to num_classes columns.
    """
    s = _entries(l)
    n = s.shape[0]
    threshold = zero_threshold(largest_eigenvalue(s))

    def enough(result: EigenResult) -> bool:
        zero = int(np.sum(result.eigenvalues <= threshold))
        if result.eigenvalues[-1] <= threshold:
            return False
        if zero <= 1:
            return len(result) - zero >= num_classes
        return len(result) >= num_classes

    result = _growing_eigen(s, num_classes + 1, threshold, enough)
    zero = np.flatnonzero(result.eigenvalues <= threshold)
    nonzero = np.flatnonzero(result.eigenvalues > threshold)

    if zero.size <= 1:
        if nonzero.size < num_classes:
            raise RankError(
                f"only {nonzero.size} nonzero eigenvalues for {num_classes} clusters",
                zero_count=int(zero.size),
            )
        columns = nonzero[:num_classes]
    else:
        app_logger.info(f"[CLUSTER] Laplacian has {zero.size} zero eigenvalues (components)")
        extra = max(0, num_classes - zero.size)
        columns = np.concatenate([zero, nonzero[:extra]])

    coordinates = result.eigenvectors[:, columns]
    norms = np.linalg.norm(coordinates, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return coordinates / norms


def cluster(l, num_classes: int, seed: int = None, restarts: int = None) -> np.ndarray:
    """
    Spectral clustering: k-means over the spectral embedding rows

    Args:
        l: LaplacianMatrix
        num_classes: Number of clusters
        seed: Random seed for k-means
        restarts: k-means restarts

    Returns:
        Predicted label per vertex, numbered by first appearance
    """
    n = _entries(l).shape[0]
    if num_classes < 1 or num_classes > n:
        raise ParameterError(f"cannot form {num_classes} clusters from {n} vertices")
    if num_classes == 1:
        return np.zeros(n, dtype=np.int64)

    coordinates = cluster_embedding(l, num_classes)
    assignment = kmeans(coordinates, num_classes, seed=seed, restarts=restarts)
    app_logger.debug(f"[CLUSTER] {num_classes} clusters, inertia {assignment.inertia:.6g}")
    return assignment.labels


def embedding_residuals(l, embedding: Embedding) -> Tuple[float, float]:
    """Max |L f - lambda f| and max |<f_i, f_j> - delta_ij| over the embedding columns"""
    s = _entries(l)
    f = embedding.coordinates
    residual = float(np.max(np.abs(s @ f - f * embedding.eigenvalues))) if f.size else 0.0
    gram = f.T @ f
    orthogonality = float(np.max(np.abs(gram - np.eye(gram.shape[0])))) if f.size else 0.0
    return residual, orthogonality
