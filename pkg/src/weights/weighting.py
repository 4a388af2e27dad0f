"""
Hyperedge weighting - scheme dispatch and mean-normalized exponential scaling
"""
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from config.settings import settings
from src.hypergraph.core import Hypergraph, ensure_valid
from src.hypergraph.generation import SampleMatrix, as_samples
from src.utils.errors import (
    ConfigurationError,
    DataError,
    DegenerateFaceError,
    DegenerateVolumeError,
    ParameterError,
)
from src.utils.logger import app_logger
from src.weights.dissimilarity import raw_centroid, raw_llre, raw_sum, raw_trace
from src.weights.volume import raw_volume_cm, raw_volume_face, raw_volume_gram


class WeightSchemeConfig(BaseModel):
    """Weighting scheme and its parameters"""
    model_config = ConfigDict(frozen=True)

    scheme: str = "binary"
    mu: float = Field(default=settings.DEFAULT_MU, gt=0)
    llre_aggregator: str = "seed"
    sum_aggregator: str = "sum"

    @field_validator("scheme")
    @classmethod
    def _known_scheme(cls, value: str) -> str:
        if not settings.validate_scheme(value):
            raise ValueError(f"unknown weighting scheme '{value}'; choose from {settings.SCHEMES}")
        return settings.normalize_scheme(value)

    @field_validator("llre_aggregator", "sum_aggregator")
    @classmethod
    def _known_aggregator(cls, value: str, info: ValidationInfo) -> str:
        if not settings.validate_aggregator(info.field_name, value):
            raise ValueError(
                f"unknown {info.field_name} '{value}'; choose from {settings.aggregators(info.field_name)}"
            )
        return value.strip().lower()

    @property
    def needs_seeds(self) -> bool:
        return self.scheme == "centroid" or (self.scheme == "llre" and self.llre_aggregator == "seed")


@dataclass(frozen=True, eq=False)
class RawDissimilarity:
    """Per-hyperedge raw dissimilarity under one scheme"""
    values: np.ndarray
    scheme: str
    degenerate: int = 0

    def __len__(self) -> int:
        return int(self.values.shape[0])


def binary_weights(g: Hypergraph) -> np.ndarray:
    """0-1 weighting: every hyperedge gets weight 1"""
    return np.ones(g.num_hyperedges)


def finalize_weights(raw, mu: float) -> np.ndarray:
    """
    Map raw dissimilarities to weights in (0, 1]

    w_i = exp(-(raw_i / mean(raw)) / mu); all-zero input gives all ones.
    Underflow is clamped to the smallest positive double.

    Args:
        raw: RawDissimilarity or array of non-negative values
        mu: Positive scaling parameter

    Returns:
        Weight per hyperedge
    """
    if mu is None or not np.isfinite(mu) or mu <= 0:
        raise ParameterError(f"mu must be a positive real, got {mu}")
    values = np.asarray(raw.values if isinstance(raw, RawDissimilarity) else raw, dtype=np.float64)
    if values.size == 0:
        return np.ones(0)
    if np.any(values < 0) or not np.all(np.isfinite(values)):
        raise DataError("raw dissimilarities must be finite and non-negative")

    mean = float(np.mean(values))
    if mean == 0.0:
        return np.ones_like(values)
    weights = np.exp(-(values / mean) / mu)
    return np.maximum(weights, np.finfo(np.float64).tiny)


class HyperedgeWeighter:
    """Computes raw dissimilarities and final weights for one scheme"""

    def __init__(self, config: WeightSchemeConfig):
        """
        Initialize weighter

        Args:
            config: Scheme configuration
        """
        self.config = config
        self._dispatch: Dict[str, Callable[[SampleMatrix, tuple, object], float]] = {
            "sum": lambda x, e, s: raw_sum(x, e, agg=config.sum_aggregator),
            "centroid": lambda x, e, s: raw_centroid(x, e, s),
            "volume-gram": lambda x, e, s: raw_volume_gram(x, e),
            "volume-cm": lambda x, e, s: raw_volume_cm(x, e),
            "volume-face": lambda x, e, s: raw_volume_face(x, e),
            "trace": lambda x, e, s: raw_trace(x, e),
            "llre": lambda x, e, s: raw_llre(x, e, agg=config.llre_aggregator, seed=s),
        }

    def raw_dissimilarity(self, x, g: Hypergraph) -> RawDissimilarity:
        """
        Raw dissimilarity of every hyperedge

        Volume degeneracies (k > d, degenerate faces) map to 0 and are
        reported once as a warning with their count.
        """
        ensure_valid(g)
        samples = as_samples(x)
        scheme = self.config.scheme
        if samples.num_samples != g.num_vertices:
            raise DataError(
                f"{samples.num_samples} samples for a hypergraph on {g.num_vertices} vertices"
            )
        if scheme == "binary":
            return RawDissimilarity(values=np.zeros(g.num_hyperedges), scheme=scheme)
        if self.config.needs_seeds and not g.has_seeds:
            raise ConfigurationError(f"scheme '{scheme}' needs a seed vertex on every hyperedge")

        compute = self._dispatch[scheme]
        values = np.zeros(g.num_hyperedges)
        degenerate = 0
        for idx, (edge, seed) in enumerate(zip(g.hyperedges, g.seeds)):
            try:
                values[idx] = compute(samples, edge, seed)
            except (DegenerateVolumeError, DegenerateFaceError) as e:
                degenerate += 1
                app_logger.debug(f"[WEIGHTS] hyperedge {idx}: {str(e)}")

        if degenerate:
            app_logger.warning(
                f"[WEIGHTS] {degenerate}/{g.num_hyperedges} hyperedges have degenerate "
                f"volume under '{scheme}'; their raw value is set to 0"
            )
        app_logger.debug(f"[WEIGHTS] '{scheme}' raw mean {values.mean() if values.size else 0.0:.6g}")
        return RawDissimilarity(values=values, scheme=scheme, degenerate=degenerate)

    def weights(self, raw: RawDissimilarity, mu: float = None) -> np.ndarray:
        """Final weights for precomputed raw values"""
        if raw.scheme == "binary":
            return np.ones(len(raw))
        return finalize_weights(raw, self.config.mu if mu is None else mu)

    def weigh(self, x, g: Hypergraph, mu: float = None) -> Hypergraph:
        """
        Weighted copy of g under the configured scheme

        Args:
            x: Sample matrix
            g: Hypergraph (weights ignored)
            mu: Optional override of the configured mu

        Returns:
            Hypergraph carrying the final weights
        """
        raw = self.raw_dissimilarity(x, g)
        weights = self.weights(raw, mu)
        app_logger.info(
            f"[WEIGHTS] scheme={self.config.scheme} mu={self.config.mu if mu is None else mu}: "
            f"weights in [{weights.min() if weights.size else 0:.4g}, {weights.max() if weights.size else 0:.4g}]"
        )
        return g.with_weights(weights)


def make_weighter(scheme: str, **kwargs) -> HyperedgeWeighter:
    """Build a weighter, converting config errors to ConfigurationError"""
    try:
        config = WeightSchemeConfig(scheme=scheme, **kwargs)
    except ValueError as e:
        raise ConfigurationError(str(e)) from e
    return HyperedgeWeighter(config)
