"""
Configuration settings for the hypergraph learning toolkit
"""
import os
from typing import Dict, List, Any
from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Application settings"""

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_DIR: str = os.getenv("LOG_DIR", "logs")
    LOG_TO_FILE: bool = os.getenv("LOG_TO_FILE", "true").lower() in ("1", "true", "yes")

    # Data Directories
    DATA_DIR: str = os.getenv("DATA_DIR", "data")
    RESULTS_DIR: str = os.path.join(DATA_DIR, "results")
    HISTORY_DIR: str = os.path.join(DATA_DIR, "history")

    # Experiment defaults
    DEFAULT_SEED: int = int(os.getenv("HYPERLAP_SEED", "42"))
    DEFAULT_MU: float = float(os.getenv("HYPERLAP_MU", "1.0"))
    DEFAULT_LAMBDA: float = float(os.getenv("HYPERLAP_LAMBDA", "1.0"))
    DEFAULT_FOLDS: int = int(os.getenv("HYPERLAP_FOLDS", "2"))
    DEFAULT_K_LIST: List[int] = [5]

    # k-means
    KMEANS_RESTARTS: int = int(os.getenv("HYPERLAP_RESTARTS", "10"))
    KMEANS_MAX_ITER: int = 300
    KMEANS_TOL: float = 1e-6

    # Numerical thresholds
    ZERO_EIGEN_RTOL: float = 1e-8
    DET_RTOL: float = 1e-12
    SYMMETRY_ATOL: float = 1e-10

    # Weighting schemes (exact CLI strings)
    SCHEMES: List[str] = [
        "binary",
        "sum",
        "centroid",
        "volume-gram",
        "volume-cm",
        "volume-face",
        "trace",
        "llre"
    ]

    # The six schemes compared in the benchmark tables
    PAPER_SCHEMES: List[str] = [
        "binary",
        "sum",
        "centroid",
        "volume-gram",
        "trace",
        "llre"
    ]

    SCHEME_ALIASES: Dict[str, str] = {
        "volume_gram": "volume-gram",
        "volume": "volume-gram",
        "volume_cayley_menger": "volume-cm",
        "volume_cm": "volume-cm",
        "volume_hyperface": "volume-face",
        "volume_face": "volume-face"
    }

    FRAMEWORKS: List[str] = ["zhou", "clique", "star"]

    LLRE_AGGREGATORS: List[str] = ["seed", "mean", "min", "max"]
    SUM_AGGREGATORS: List[str] = ["sum", "mean"]

    # Per-dataset protocol presets
    DATASET_PRESETS: Dict[str, Dict[str, Any]] = {
        "orl": {"k_list": [5], "lambda": 1.0},
        "coil20": {"k_list": [3], "lambda": 1.0},
        "jaffe": {"k_list": [5], "lambda": 1.0},
        "sheffield": {"k_list": [5], "lambda": 1.0},
        "scene15": {
            "k_list": [10, 20, 30, 40, 50],
            "cluster_k_list": [10, 20, 30, 40, 50],
            "lambda": 1.0
        },
        "caltech256": {
            "k_list": [3, 5, 10, 15, 20],
            "cluster_k_list": [50, 100],
            "lambda": 1.0
        }
    }

    @classmethod
    def normalize_scheme(cls, scheme: str) -> str:
        """Map a scheme name or alias onto its canonical CLI string"""
        name = scheme.strip().lower()
        return cls.SCHEME_ALIASES.get(name, name)

    @classmethod
    def validate_scheme(cls, scheme: str) -> bool:
        """Validate if scheme is available"""
        return cls.normalize_scheme(scheme) in cls.SCHEMES

    @classmethod
    def validate_framework(cls, framework: str) -> bool:
        """Validate if framework is available"""
        return framework.strip().lower() in cls.FRAMEWORKS

    @classmethod
    def aggregators(cls, field: str) -> List[str]:
        """Aggregator names accepted by llre_aggregator or sum_aggregator"""
        return cls.LLRE_AGGREGATORS if field == "llre_aggregator" else cls.SUM_AGGREGATORS

    @classmethod
    def validate_aggregator(cls, field: str, name: str) -> bool:
        """Validate if the aggregator is available for field"""
        return name.strip().lower() in cls.aggregators(field)

    @classmethod
    def get_preset(cls, name: str) -> Dict[str, Any]:
        """Get a copy of a dataset preset"""
        preset = cls.DATASET_PRESETS.get(name.strip().lower())
        return dict(preset) if preset else {}


settings = Settings()
