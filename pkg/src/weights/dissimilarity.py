"""
Raw per-hyperedge dissimilarities - pairwise sums, centroid distances,
scatter trace and local linear reconstruction error
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from src.hypergraph.generation import as_samples, pairwise_sq_distances
from src.numerics.kernels import min_norm_least_squares
from src.utils.errors import ConfigurationError, NormalizationError, ParameterError


@dataclass(frozen=True, eq=False)
class ScatterMatrix:
    """d x d scatter matrix of a hyperedge's samples"""
    entries: np.ndarray
    mean: np.ndarray

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


def raw_sum(x, e: Sequence[int], agg: str = "sum") -> float:
    """
    Sum (or mean over the C(|e|,2) pairs) of pairwise squared distances in e
    """
    d2 = pairwise_sq_distances(x, e)
    total = float(np.sum(np.triu(d2, k=1)))
    if agg == "sum":
        return total
    if agg == "mean":
        pairs = len(e) * (len(e) - 1) / 2
        return total / pairs
    raise ParameterError(f"unknown sum aggregator '{agg}'")


def raw_centroid(x, e: Sequence[int], seed: Optional[int]) -> float:
    """Sum of squared distances from the seed to every other member of e"""
    if seed is None:
        raise ConfigurationError("centroid weighting needs hyperedges with a seed vertex")
    samples = as_samples(x)
    members = [v for v in e if v != seed]
    diffs = samples.rows(members) - samples.values[seed]
    return float(np.sum(diffs * diffs))


def scatter_matrix(x, e: Sequence[int]) -> ScatterMatrix:
    """S = sum_i (x_i - mean)(x_i - mean)^T over the members of e"""
    points = as_samples(x).rows(e)
    mean = points.mean(axis=0)
    centered = points - mean
    return ScatterMatrix(entries=centered.T @ centered, mean=mean)


def raw_trace(x, e: Sequence[int]) -> float:
    """trace(S), computed as the total squared deviation from the hyperedge mean"""
    points = as_samples(x).rows(e)
    centered = points - points.mean(axis=0)
    return float(np.sum(centered * centered))


def reconstruction_error(x, vertex: int, others: Sequence[int]) -> float:
    """
    Relative residual of reconstructing one sample from others

    r = ||x_i - X c||^2 / ||x_i||^2 with c the minimum-norm least-squares coefficients.
    """
    samples = as_samples(x)
    target = samples.values[vertex]
    norm2 = float(target @ target)
    if norm2 == 0.0:
        raise NormalizationError(
            f"sample {vertex} has zero norm; reconstruction error is undefined", vertex=vertex
        )
    basis = samples.rows(others).T
    coefficients = min_norm_least_squares(basis, target)
    residual = target - basis @ coefficients
    return float(residual @ residual) / norm2


def raw_llre(x, e: Sequence[int], agg: str = "seed", seed: Optional[int] = None) -> float:
    """
    Leave-one-out local linear reconstruction error of hyperedge e

    Args:
        x: Sample matrix
        e: Hyperedge members
        agg: seed (seed vertex only), mean, min or max over members
        seed: Seed vertex, required for agg='seed'
    """
    members = list(e)
    if agg == "seed":
        if seed is None:
            raise ConfigurationError("llre aggregator 'seed' needs hyperedges with a seed vertex")
        evaluated = [seed]
    elif agg in ("mean", "min", "max"):
        evaluated = members
    else:
        raise ParameterError(f"unknown llre aggregator '{agg}'")

    errors = np.array([
        reconstruction_error(x, v, [t for t in members if t != v]) for v in evaluated
    ])
    if agg == "min":
        return float(errors.min())
    if agg == "max":
        return float(errors.max())
    return float(errors.mean())
