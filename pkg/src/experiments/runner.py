"""
Experiment runner - cross-validated classification and clustering over the
scheme x framework grid, with mu and k sweeps
"""
import time
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sklearn.model_selection import StratifiedKFold, StratifiedShuffleSplit

from src.experiments.config import ExperimentConfig
from src.experiments.datasets import load_dataset
from src.experiments.results import ResultRow, select_optimal_mu
from src.hypergraph.core import Hypergraph
from src.hypergraph.generation import NeighborhoodSpec, multi_k_hyperedges
from src.laplacian.factory import LaplacianFactory
from src.laplacian.frameworks import LaplacianMatrix
from src.learning.classification import build_label_matrix, classify
from src.learning.embedding import cluster
from src.learning.metrics import accuracy, error_rate, nmi
from src.utils.errors import ParameterError, StratificationError
from src.utils.logger import app_logger
from src.weights.weighting import HyperedgeWeighter, RawDissimilarity, make_weighter


class ExperimentRunner:
    """
    Runs the learning pipeline for one configuration

    Hypergraphs, raw dissimilarities and Laplacians are cached, so sweeps and
    folds reuse everything that does not depend on them.
    """

    def __init__(self, cfg: ExperimentConfig, samples=None, labels=None):
        """
        Initialize runner

        Args:
            cfg: Experiment configuration
            samples: Preloaded SampleMatrix (read from cfg.dataset_path when None)
            labels: Preloaded labels (read from cfg.labels_path when None)
        """
        self.cfg = cfg
        if samples is None or labels is None:
            samples, labels = load_dataset(cfg.dataset_path, cfg.labels_path)
        self.samples = samples
        self.labels = np.asarray(labels, dtype=np.int64)
        self.num_classes = int(self.labels.max()) + 1

        self._hypergraphs: Dict[Tuple[int, ...], Hypergraph] = {}
        self._weighters: Dict[str, HyperedgeWeighter] = {}
        self._raw: Dict[Tuple, RawDissimilarity] = {}
        self._laplacians: Dict[Tuple, LaplacianMatrix] = {}
        self._clusterings: Dict[Tuple, np.ndarray] = {}

        app_logger.info(
            f"[RUNNER] {cfg.dataset_name}: task={cfg.task}, schemes={cfg.scheme}, "
            f"frameworks={cfg.framework}, k={cfg.task_k_list}"
        )

    # pipeline pieces

    def hypergraph(self, k_list: Sequence[int]) -> Hypergraph:
        key = tuple(k_list)
        if key not in self._hypergraphs:
            self._hypergraphs[key] = multi_k_hyperedges(self.samples, NeighborhoodSpec(k_list=key))
        return self._hypergraphs[key]

    def weighter(self, scheme: str) -> HyperedgeWeighter:
        if scheme not in self._weighters:
            self._weighters[scheme] = make_weighter(
                scheme,
                mu=self.cfg.mu,
                llre_aggregator=self.cfg.llre_aggregator,
                sum_aggregator=self.cfg.sum_aggregator,
            )
        return self._weighters[scheme]

    def raw_dissimilarity(self, scheme: str, k_list: Sequence[int]) -> RawDissimilarity:
        key = (scheme, tuple(k_list))
        if key not in self._raw:
            self._raw[key] = self.weighter(scheme).raw_dissimilarity(self.samples, self.hypergraph(k_list))
        return self._raw[key]

    def laplacian(self, scheme: str, framework: str, mu: float, k_list: Sequence[int]) -> LaplacianMatrix:
        """Laplacian of the weighted hypergraph for one grid cell"""
        key = (scheme, framework, float(mu), tuple(k_list))
        if key not in self._laplacians:
            weights = self.weighter(scheme).weights(self.raw_dissimilarity(scheme, k_list), mu)
            weighted = self.hypergraph(k_list).with_weights(weights)
            self._laplacians[key] = LaplacianFactory.create_laplacian(framework, weighted)
        return self._laplacians[key]

    def cluster_labels(self, scheme: str, framework: str, mu: float, k_list: Sequence[int]) -> np.ndarray:
        key = (scheme, framework, float(mu), tuple(k_list))
        if key not in self._clusterings:
            self._clusterings[key] = cluster(
                self.laplacian(scheme, framework, mu, k_list),
                self.num_classes,
                seed=self.cfg.seed,
                restarts=self.cfg.restarts,
            )
        return self._clusterings[key]

    def _row(self, scheme, framework, k_list, mu, fold, metric, value, started) -> ResultRow:
        seconds = round(time.monotonic() - started, 3) if self.cfg.record_seconds else 0.0
        return ResultRow(
            dataset=self.cfg.dataset_name,
            scheme=scheme,
            framework=framework,
            k_list=list(k_list),
            mu=mu,
            fold=fold,
            metric=metric,
            value=float(np.clip(value, 0.0, 1.0)),
            seconds=seconds,
        )

    # splits

    def splits(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        """
        Stratified (train, test) index pairs

        k-fold splitting by default; stratified shuffle splits with the
        configured training share when train_fraction is set.
        """
        cfg = self.cfg
        _, counts = np.unique(self.labels, return_counts=True)
        smallest = int(counts.min())
        placeholder = np.zeros(self.labels.shape[0])

        if cfg.train_fraction is None:
            if cfg.folds > smallest:
                raise StratificationError(
                    f"{cfg.folds} folds need at least {cfg.folds} samples per class; "
                    f"the smallest class has {smallest}"
                )
            splitter = StratifiedKFold(n_splits=cfg.folds, shuffle=True, random_state=cfg.seed)
        else:
            splitter = StratifiedShuffleSplit(
                n_splits=cfg.folds, train_size=cfg.train_fraction, random_state=cfg.seed
            )

        try:
            pairs = [(train, test) for train, test in splitter.split(placeholder, self.labels)]
        except ValueError as e:
            raise StratificationError(f"cannot build stratified splits: {str(e)}") from e

        for fold, (train, _) in enumerate(pairs, start=1):
            absent = np.setdiff1d(np.arange(self.num_classes), self.labels[train])
            if absent.size:
                raise StratificationError(f"classes {absent.tolist()} are absent from training fold {fold}")
        return pairs

    # tuning

    def tune_mu(self, scheme: str, framework: str, k_list: Sequence[int], train: np.ndarray) -> float:
        """
        mu maximizing mean(accuracy, nmi) of clustering, scored on the training vertices only

        Ties go to the smaller mu.
        """
        best_mu, best_score = None, -np.inf
        for mu in sorted(self.cfg.mu_grid):
            predicted = self.cluster_labels(scheme, framework, mu, k_list)
            score = 0.5 * (
                accuracy(predicted[train], self.labels[train]) + nmi(predicted[train], self.labels[train])
            )
            if score > best_score:
                best_mu, best_score = mu, score
        app_logger.debug(f"[RUNNER] {scheme}/{framework}: tuned mu={best_mu} (score {best_score:.4f})")
        return best_mu

    # experiments

    def run_classification(self, mu: Optional[float] = None, k_list: Optional[Sequence[int]] = None) -> List[ResultRow]:
        """
        Cross-validated transductive classification over the grid

        Args:
            mu: Fixed mu (overrides cfg.mu and disables per-fold tuning)
            k_list: Neighborhood sizes (defaults to the configured list)

        Returns:
            One error_rate row per cell and fold (folds numbered from 1)
        """
        cfg = self.cfg
        k_list = list(k_list or cfg.task_k_list)
        tuning = mu is None and bool(cfg.mu_grid)
        rows = []

        for fold, (train, test) in enumerate(self.splits(), start=1):
            partial = self.labels.copy()
            partial[test] = -1
            y = build_label_matrix(partial, self.num_classes)
            for scheme in cfg.scheme:
                for framework in cfg.framework:
                    started = time.monotonic()
                    cell_mu = self.tune_mu(scheme, framework, k_list, train) if tuning else (mu or cfg.mu)
                    result = classify(self.laplacian(scheme, framework, cell_mu, k_list), y, cfg.lam)
                    error = error_rate(result.labels[test], self.labels[test])
                    rows.append(self._row(scheme, framework, k_list, cell_mu, fold, "error_rate", error, started))
                    app_logger.debug(
                        f"[RUNNER] fold {fold} {scheme}/{framework} mu={cell_mu}: error {error:.4f}"
                    )

        app_logger.info(f"[RUNNER] classification done: {len(rows)} rows")
        return rows

    def run_clustering(self, mu: Optional[float] = None, k_list: Optional[Sequence[int]] = None) -> List[ResultRow]:
        """
        Cluster the full dataset for every grid cell

        Returns:
            accuracy and nmi rows with fold 0
        """
        cfg = self.cfg
        k_list = list(k_list or cfg.task_k_list)
        mu = cfg.mu if mu is None else mu
        rows = []

        for scheme in cfg.scheme:
            for framework in cfg.framework:
                started = time.monotonic()
                predicted = self.cluster_labels(scheme, framework, mu, k_list)
                ac = accuracy(predicted, self.labels)
                score = nmi(predicted, self.labels)
                rows.append(self._row(scheme, framework, k_list, mu, 0, "accuracy", ac, started))
                rows.append(self._row(scheme, framework, k_list, mu, 0, "nmi", score, started))
                app_logger.info(f"[RUNNER] {scheme}/{framework} mu={mu}: AC={ac:.4f} NMI={score:.4f}")
        return rows

    def run(self, mu: Optional[float] = None, k_list: Optional[Sequence[int]] = None) -> List[ResultRow]:
        """Run the configured task"""
        if self.cfg.task == "cluster":
            return self.run_clustering(mu=mu, k_list=k_list)
        return self.run_classification(mu=mu, k_list=k_list)

    def sweep_mu(self, mu_values: Sequence[float]) -> List[ResultRow]:
        """
        One run per mu; the best mu per (scheme, framework) is logged

        Args:
            mu_values: Positive mu values

        Returns:
            Rows of every run
        """
        mu_values = [float(mu) for mu in mu_values]
        if not mu_values:
            raise ParameterError("mu sweep needs at least one value")
        if any(not np.isfinite(mu) or mu <= 0 for mu in mu_values):
            raise ParameterError(f"mu values must be positive, got {mu_values}")

        rows = []
        for mu in mu_values:
            rows.extend(self.run(mu=mu))

        for record in select_optimal_mu(rows).to_dict(orient="records"):
            app_logger.info(
                f"[RUNNER] optimal mu for {record['scheme']}/{record['framework']}: "
                f"{record['mu']} (score {record['score']:.4f})"
            )
        return rows

    def select_k(self, k_candidates: Sequence[int]) -> Tuple[int, List[ResultRow]]:
        """
        Cross-validated choice of k: lowest mean error rate, ties to the smaller k

        Returns:
            (best k, rows of every candidate)
        """
        if not k_candidates:
            raise ParameterError("k selection needs at least one candidate")

        rows, best_k, best_error = [], None, np.inf
        for k in sorted(int(k) for k in k_candidates):
            candidate = self.run_classification(k_list=[k])
            rows.extend(candidate)
            mean_error = float(np.mean([row.value for row in candidate]))
            app_logger.info(f"[RUNNER] k={k}: mean error {mean_error:.4f}")
            if mean_error < best_error:
                best_k, best_error = k, mean_error
        app_logger.info(f"[RUNNER] selected k={best_k}")
        return best_k, rows


def run_classification(cfg: ExperimentConfig) -> List[ResultRow]:
    """Cross-validated classification rows for cfg"""
    return ExperimentRunner(cfg).run_classification()


def run_clustering(cfg: ExperimentConfig) -> List[ResultRow]:
    """Clustering rows for cfg"""
    return ExperimentRunner(cfg).run_clustering()


def sweep_mu(cfg: ExperimentConfig, mu_values: Sequence[float]) -> List[ResultRow]:
    """Rows for every mu in mu_values"""
    return ExperimentRunner(cfg).sweep_mu(mu_values)


def select_k(cfg: ExperimentConfig, k_candidates: Sequence[int]) -> Tuple[int, List[ResultRow]]:
    """Best k and the rows of every candidate"""
    return ExperimentRunner(cfg).select_k(k_candidates)
