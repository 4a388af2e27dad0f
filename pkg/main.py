"""
Main CLI interface for the hypergraph learning toolkit

    hyperlap run --config exp.cfg [--task cluster|classify] [--scheme S] [--framework F]
                 [--k 5 | --k 10,20,30] [--mu 1.0] [--lambda 1.0] [--folds 2] [--seed 42] [--out results.csv]
    hyperlap validate --config exp.cfg
    hyperlap sweep --config exp.cfg --mu-grid 0.1,1,10,100
    hyperlap tune-k --config exp.cfg --k-grid 3,5,7
    hyperlap history [--limit 10] [--search KEYWORD | --clear]

Exit codes: 0 success, 1 configuration error, 2 data error, 3 numerical failure.
"""
import argparse
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from config.settings import settings
from src.experiments.config import ExperimentConfig, load_config
from src.experiments.results import CELL_KEYS, competing_mu, emit_results, rows_to_frame, summarize
from src.experiments.runner import ExperimentRunner
from src.hypergraph.core import compute_degrees, connected_components, validate
from src.hypergraph.io import write_hypergraph
from src.tools.history_manager import RunHistory
from src.utils.errors import ConfigurationError, HyperlapError
from src.utils.logger import app_logger


def _add_overrides(parser: argparse.ArgumentParser):
    """Flags that override config file keys of the same name"""
    parser.add_argument("--config", required=True, help="Path to a `key = value` config file")
    parser.add_argument("--preset", help="Dataset preset (orl, coil20, jaffe, sheffield, scene15, caltech256)")
    parser.add_argument("--task", choices=["cluster", "classify"])
    parser.add_argument("--scheme", help="Weighting scheme(s), comma-separated, 'all' or 'paper'")
    parser.add_argument("--framework", help="Laplacian framework(s), comma-separated or 'all'")
    parser.add_argument("--k", dest="k_list", help="Neighbors per seed, e.g. 5 or 10,20,30")
    parser.add_argument("--mu", type=float)
    parser.add_argument("--lambda", dest="lam", type=float)
    parser.add_argument("--folds", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--restarts", type=int)
    parser.add_argument("--out", dest="output_path", help="Result CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlap", description="Hypergraph learning experiments")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run one experiment grid")
    _add_overrides(run)

    check = commands.add_parser("validate", help="Validate config, data and the generated hypergraph")
    _add_overrides(check)
    check.add_argument("--save-hypergraph", help="Write the generated hypergraph to this file")

    sweep = commands.add_parser("sweep", help="Sweep mu and report the best value per cell")
    _add_overrides(sweep)
    sweep.add_argument("--mu-grid", required=True, help="Comma-separated mu values")

    tune = commands.add_parser("tune-k", help="Choose k by cross-validated classification")
    _add_overrides(tune)
    tune.add_argument("--k-grid", required=True, help="Comma-separated candidate k values")

    history = commands.add_parser("history", help="List, search or clear recorded runs")
    history.add_argument("--limit", type=int, default=10)
    action = history.add_mutually_exclusive_group()
    action.add_argument("--search", metavar="KEYWORD", help="Only runs whose command or dataset contains KEYWORD")
    action.add_argument("--clear", action="store_true", help="Delete every recorded run")

    return parser


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    overrides = {
        "preset": args.preset,
        "task": args.task,
        "scheme": args.scheme,
        "framework": args.framework,
        "k_list": args.k_list,
        "mu": args.mu,
        "lambda": args.lam,
        "folds": args.folds,
        "seed": args.seed,
        "restarts": args.restarts,
        "output_path": args.output_path,
    }
    return load_config(args.config, overrides)


def _output_path(cfg: ExperimentConfig, suffix: str = "") -> Path:
    if cfg.output_path is not None:
        return cfg.output_path
    return Path(settings.RESULTS_DIR) / f"{cfg.dataset_name}_{cfg.task}{suffix}.csv"


def _parse_numbers(text: str, kind, flag: str) -> List:
    try:
        values = [kind(item.strip()) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigurationError(f"{flag}: cannot parse '{text}'") from e
    if not values:
        raise ConfigurationError(f"{flag} needs at least one value")
    return values


def _print_summary(rows):
    frame = rows_to_frame(rows)
    pooled = [key for key in CELL_KEYS if key != "mu"]
    # per-fold tuning leaves one mu per fold but several per cell
    tuned = not frame.empty and not competing_mu(frame) and frame.groupby(pooled)["mu"].nunique().max() > 1
    summary = summarize(frame, pooled if tuned else CELL_KEYS)
    if summary.empty:
        print("No results.")
        return
    for record in summary.to_dict(orient="records"):
        print(
            f"{record['scheme']:<12} {record['framework']:<7} k={record['k_list']:<10} "
            f"mu={'tuned' if tuned else format(record['mu'], 'g'):<8} {record['metric']:<11} {100 * record['mean']:6.2f} ± {100 * record['std']:.2f}"
        )


def _record(command: str, cfg: ExperimentConfig, outputs, summary: Optional[Dict[str, Any]] = None):
    RunHistory().add_run(command, cfg.model_dump(mode="json", by_alias=True), outputs, summary)


def cmd_run(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    print("=" * 60)
    print(f"hyperlap run: {cfg.dataset_name} ({cfg.task})")
    print("=" * 60)

    rows = ExperimentRunner(cfg).run()
    outputs = emit_results(rows, _output_path(cfg))
    _print_summary(rows)
    print(f"\nResults written to {outputs[0]}")
    _record("run", cfg, outputs)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    mu_values = _parse_numbers(args.mu_grid, float, "--mu-grid")
    print("=" * 60)
    print(f"hyperlap sweep: {cfg.dataset_name} ({cfg.task}), mu in {mu_values}")
    print("=" * 60)

    rows = ExperimentRunner(cfg).sweep_mu(mu_values)
    outputs = emit_results(rows, _output_path(cfg, "_sweep"))
    _print_summary(rows)
    print(f"\nResults written to {outputs[0]}")
    _record("sweep", cfg, outputs)
    return 0


def cmd_tune_k(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    k_values = _parse_numbers(args.k_grid, int, "--k-grid")
    print("=" * 60)
    print(f"hyperlap tune-k: {cfg.dataset_name}, k in {k_values}")
    print("=" * 60)

    best_k, rows = ExperimentRunner(cfg).select_k(k_values)
    outputs = emit_results(rows, _output_path(cfg, "_tune_k"))
    _print_summary(rows)
    print(f"\nSelected k = {best_k}")
    print(f"Results written to {outputs[0]}")
    _record("tune-k", cfg, outputs, {"best_k": best_k})
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    runner = ExperimentRunner(cfg)
    g = runner.hypergraph(cfg.task_k_list)
    report = validate(g)

    print("=" * 60)
    print(f"hyperlap validate: {cfg.dataset_name}")
    print("=" * 60)
    if not report.ok:
        print(f"Validation:      {report.summary()}")
        return 2

    degrees = compute_degrees(g)
    components, _ = connected_components(g)
    isolated = int(np.sum(degrees.vertex_degrees == 0))
    print(f"Samples:         {runner.samples.num_samples} x {runner.samples.num_features}")
    print(f"Classes:         {runner.num_classes}")
    print(f"k:               {cfg.task_k_list}")
    print(f"Vertices:        {g.num_vertices}")
    print(f"Hyperedges:      {g.num_hyperedges}")
    print(f"Mean degree:     {float(np.mean(degrees.edge_degrees)) if g.num_hyperedges else 0.0:.3f}")
    print(f"Isolated:        {isolated}")
    print(f"Components:      {components}")
    print(f"Validation:      {report.summary()}")

    if args.save_hypergraph:
        write_hypergraph(g, args.save_hypergraph)
        print(f"Hypergraph written to {args.save_hypergraph}")
    return 0


def cmd_history(args: argparse.Namespace) -> int:
    history = RunHistory()
    if args.clear:
        history.clear_history()
        print("Run history cleared.")
        return 0

    if args.search:
        entries = history.search_history(args.search)[:max(args.limit, 0)]
        title = f"Runs matching '{args.search}' ({len(entries)})"
    else:
        entries = history.get_history(args.limit)
        title = f"Recent runs ({len(entries)})"
    print("=" * 60)
    print(title)
    print("=" * 60)
    for entry in entries:
        dataset = entry.get("config", {}).get("dataset_path", "")
        print(f"{entry['timestamp']}  {entry['command']:<8} {os.path.basename(str(dataset))}")
        for path in entry.get("outputs", [])[:1]:
            print(f"    -> {path}")
    return 0


COMMANDS = {
    "run": cmd_run,
    "validate": cmd_validate,
    "sweep": cmd_sweep,
    "tune-k": cmd_tune_k,
    "history": cmd_history,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI function; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse usage errors count as configuration errors
        return 0 if e.code in (0, None) else ConfigurationError.exit_code

    try:
        return COMMANDS[args.command](args)
    except HyperlapError as e:
        app_logger.error(f"[CLI] {type(e).__name__}: {str(e)}")
        print(f"Error: {str(e)}", file=sys.stderr)
        return e.exit_code


def main_entry():
    """Console-script entry point"""
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
