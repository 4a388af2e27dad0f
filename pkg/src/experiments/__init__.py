"""Experiment harness: configuration, datasets, runs and result files"""
from src.experiments.config import ExperimentConfig, build_config, load_config, parse_config_text
from src.experiments.datasets import load_dataset, load_features, load_labels
from src.experiments.results import (
    ResultRow,
    rows_to_frame,
    summarize,
    select_optimal_mu,
    competing_mu,
    at_optimal_mu,
    results_table,
    plot_data,
    choice_impact,
    companion_path,
    emit_results,
    read_results,
)
from src.experiments.runner import (
    ExperimentRunner,
    run_classification,
    run_clustering,
    sweep_mu,
    select_k,
)

__all__ = [
    "ExperimentConfig",
    "build_config",
    "load_config",
    "parse_config_text",
    "load_dataset",
    "load_features",
    "load_labels",
    "ResultRow",
    "rows_to_frame",
    "summarize",
    "select_optimal_mu",
    "competing_mu",
    "at_optimal_mu",
    "results_table",
    "plot_data",
    "choice_impact",
    "companion_path",
    "emit_results",
    "read_results",
    "ExperimentRunner",
    "run_classification",
    "run_clustering",
    "sweep_mu",
    "select_k"
]
