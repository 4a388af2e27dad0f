"""Hyperedge weighting module"""
from src.weights.dissimilarity import (
    ScatterMatrix,
    raw_sum,
    raw_centroid,
    raw_trace,
    raw_llre,
    scatter_matrix,
    reconstruction_error,
)
from src.weights.volume import (
    simplex_volume_gram,
    raw_volume_gram,
    raw_volume_cayley_menger,
    raw_volume_cm,
    raw_volume_hyperface,
    raw_volume_face,
    fit_hyperfaces,
)
from src.weights.weighting import (
    WeightSchemeConfig,
    RawDissimilarity,
    HyperedgeWeighter,
    binary_weights,
    finalize_weights,
    make_weighter,
)

__all__ = [
    "ScatterMatrix",
    "raw_sum",
    "raw_centroid",
    "raw_trace",
    "raw_llre",
    "scatter_matrix",
    "reconstruction_error",
    "simplex_volume_gram",
    "raw_volume_gram",
    "raw_volume_cayley_menger",
    "raw_volume_cm",
    "raw_volume_hyperface",
    "raw_volume_face",
    "fit_hyperfaces",
    "WeightSchemeConfig",
    "RawDissimilarity",
    "HyperedgeWeighter",
    "binary_weights",
    "finalize_weights",
    "make_weighter"
]
