"""
Hyperedge generation from samples by k-nearest-neighbor search
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from src.hypergraph.core import Hypergraph
from src.utils.errors import DataError, ParameterError
from src.utils.logger import app_logger


@dataclass(frozen=True, eq=False)
class SampleMatrix:
    """n samples x d features; row index is the vertex id"""
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != 2:
            raise DataError(f"sample matrix must be 2-D, got {values.ndim} dimensions")
        n, d = values.shape
        if n < 2:
            raise DataError(f"sample matrix needs at least 2 samples, got {n}")
        if d < 1:
            raise DataError("sample matrix needs at least 1 feature")
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            row, col = bad[0]
            raise DataError(f"non-finite feature at sample {row}, column {col}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def num_samples(self) -> int:
        return int(self.values.shape[0])

    @property
    def num_features(self) -> int:
        return int(self.values.shape[1])

    def rows(self, vertices: Sequence[int]) -> np.ndarray:
        """Samples of the given vertices, one per row"""
        return self.values[list(vertices)]


def as_samples(x) -> SampleMatrix:
    """Wrap an array-like as a SampleMatrix (no copy for an existing one)"""
    return x if isinstance(x, SampleMatrix) else SampleMatrix(np.asarray(x))


@dataclass(frozen=True)
class NeighborhoodSpec:
    """Neighbors per seed, possibly several k values whose hyperedges are unioned"""
    k_list: Tuple[int, ...] = field(default=(5,))
    metric: str = "sqeuclidean"

    def __post_init__(self):
        object.__setattr__(self, "k_list", tuple(int(k) for k in self.k_list))

    def check(self, num_samples: int):
        """Raise ParameterError unless every k is usable on num_samples samples"""
        if not self.k_list:
            raise ParameterError("k_list must not be empty")
        if any(b <= a for a, b in zip(self.k_list, self.k_list[1:])):
            raise ParameterError(f"k_list must be strictly increasing, got {list(self.k_list)}")
        for k in self.k_list:
            _check_k(k, num_samples)
        if self.metric != "sqeuclidean":
            raise ParameterError(f"unsupported metric '{self.metric}'")


def _check_k(k: int, num_samples: int):
    if k < 1:
        raise ParameterError(f"k must be a positive integer, got {k}")
    if k >= num_samples:
        raise ParameterError(f"k={k} must be smaller than the sample count {num_samples}")


def pairwise_sq_distances(x, e: Optional[Sequence[int]] = None) -> np.ndarray:
    """
    Squared Euclidean distances between the samples of a vertex set

    Args:
        x: Sample matrix
        e: Vertex indices (all samples when None)

    Returns:
        Symmetric |e| x |e| matrix with zero diagonal
    """
    samples = as_samples(x)
    points = samples.values if e is None else samples.rows(e)
    d2 = cdist(points, points, metric="sqeuclidean")
    np.fill_diagonal(d2, 0.0)
    return d2


def nearest_neighbors(x, k: int) -> np.ndarray:
    """
    Brute-force k nearest neighbors of every sample

    The seed is never its own neighbor; distance ties go to the smaller index.

    Returns:
        n x k array of neighbor indices, nearest first
    """
    samples = as_samples(x)
    _check_k(k, samples.num_samples)

    d2 = pairwise_sq_distances(samples)
    np.fill_diagonal(d2, np.inf)
    order = np.argsort(d2, axis=1, kind="stable")
    return order[:, :k]


def knn_hyperedges(x, k: int) -> Hypergraph:
    """
    One hyperedge per sample: the seed plus its k nearest neighbors

    Args:
        x: Sample matrix
        k: Neighbors per seed, 1 <= k < n

    Returns:
        Hypergraph with n unit-weight hyperedges, seeds set
    """
    samples = as_samples(x)
    neighbors = nearest_neighbors(samples, k)
    n = samples.num_samples

    edges = [[i] + neighbors[i].tolist() for i in range(n)]
    app_logger.debug(f"[KNN] built {n} hyperedges with k={k}")
    return Hypergraph.from_edges(n, edges, np.ones(n), seeds=list(range(n)))


def multi_k_hyperedges(x, spec: NeighborhoodSpec) -> Hypergraph:
    """
    Union of knn_hyperedges over every k in spec.k_list, exact duplicates removed

    The first occurrence of a vertex set is kept together with its seed.
    """
    samples = as_samples(x)
    spec.check(samples.num_samples)

    seen: Dict[Tuple[int, ...], int] = {}
    edges: List[Tuple[int, ...]] = []
    seeds: List[Optional[int]] = []
    generated = 0

    for k in spec.k_list:
        g = knn_hyperedges(samples, k)
        for edge, seed in zip(g.hyperedges, g.seeds):
            generated += 1
            if edge in seen:
                continue
            seen[edge] = len(edges)
            edges.append(edge)
            seeds.append(seed)

    app_logger.info(
        f"[KNN] k_list={list(spec.k_list)}: {generated} hyperedges generated, "
        f"{len(edges)} kept after deduplication"
    )
    return Hypergraph.from_edges(samples.num_samples, edges, np.ones(len(edges)), seeds)
