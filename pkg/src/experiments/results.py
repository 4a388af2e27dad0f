"""
Result rows, summaries and the CSV files written after a run
"""
from pathlib import Path
from typing import Iterable, List, Literal, Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.utils.errors import DataError
from src.utils.logger import app_logger

COLUMNS = ["dataset", "scheme", "framework", "k_list", "mu", "fold", "metric", "value", "seconds"]
SORT_KEYS = ["scheme", "framework", "mu", "fold", "metric", "k_list", "dataset"]
CELL_KEYS = ["dataset", "scheme", "framework", "k_list", "mu"]
FOLD_KEYS = ["dataset", "k_list", "scheme", "framework", "fold", "metric"]


class ResultRow(BaseModel):
    """One metric value of one grid cell and fold"""
    model_config = ConfigDict(frozen=True)

    dataset: str
    scheme: str
    framework: str
    k_list: str
    mu: float = Field(gt=0)
    fold: int = Field(ge=0)
    metric: Literal["error_rate", "accuracy", "nmi"]
    value: float = Field(ge=0, le=1)
    seconds: float = Field(default=0.0, ge=0)

    @field_validator("k_list", mode="before")
    @classmethod
    def _join_k(cls, value) -> str:
        if isinstance(value, (list, tuple)):
            return ";".join(str(int(k)) for k in value)
        return str(value)


def rows_to_frame(rows: Iterable[ResultRow]) -> pd.DataFrame:
    """Rows as a DataFrame in output order"""
    frame = pd.DataFrame([row.model_dump() for row in rows], columns=COLUMNS)
    if frame.empty:
        return frame
    return frame.sort_values(SORT_KEYS, kind="mergesort").reset_index(drop=True)


def _frame(rows) -> pd.DataFrame:
    return rows if isinstance(rows, pd.DataFrame) else rows_to_frame(rows)


def summarize(rows, keys: Sequence[str] = CELL_KEYS) -> pd.DataFrame:
    """
    Mean, sample standard deviation and count of every metric per grid cell

    Args:
        rows: Result rows or their frame
        keys: Columns that identify a cell; drop "mu" to pool folds that tuned different mu values
    """
    frame = _frame(rows)
    keys = list(keys)
    if frame.empty:
        return pd.DataFrame(columns=keys + ["metric", "mean", "std", "count"])
    summary = (
        frame.groupby(keys + ["metric"], sort=True)["value"]
        .agg(["mean", "std", "count"])
        .reset_index()
    )
    summary["std"] = summary["std"].fillna(0.0)
    return summary


def _cell_scores(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Per-cell selection score: mean(accuracy, nmi) for clustering, mean(1 - error) for classification
    """
    per_fold = frame.pivot_table(
        index=CELL_KEYS + ["fold"], columns="metric", values="value", aggfunc="mean"
    )
    if "error_rate" in per_fold.columns:
        per_fold["score"] = 1.0 - per_fold["error_rate"]
    else:
        per_fold["score"] = per_fold[["accuracy", "nmi"]].mean(axis=1)
    return per_fold["score"].groupby(level=CELL_KEYS).mean().reset_index()


def select_optimal_mu(rows) -> pd.DataFrame:
    """
    Best mu per (dataset, k_list, scheme, framework); ties go to the smaller mu

    Returns:
        DataFrame with columns dataset, k_list, scheme, framework, mu, score
    """
    frame = _frame(rows)
    columns = ["dataset", "k_list", "scheme", "framework", "mu", "score"]
    if frame.empty:
        return pd.DataFrame(columns=columns)
    scores = _cell_scores(frame).sort_values(
        ["dataset", "k_list", "scheme", "framework", "mu"], kind="mergesort"
    )
    best = scores.loc[
        scores.groupby(["dataset", "k_list", "scheme", "framework"], sort=True)["score"].idxmax()
    ]
    return best[columns].reset_index(drop=True)


def competing_mu(rows) -> bool:
    """True when some fold of some cell was scored under more than one mu (a sweep)"""
    frame = _frame(rows)
    if frame.empty:
        return False
    return bool(frame.groupby(FOLD_KEYS)["mu"].nunique().max() > 1)


def at_optimal_mu(rows) -> pd.DataFrame:
    """
    Keep only the rows of each cell's optimal mu

    Rows whose mu differs only across folds come from per-fold tuning and
    are all kept.
    """
    frame = _frame(rows)
    if not competing_mu(frame):
        return frame
    best = select_optimal_mu(frame)[["dataset", "k_list", "scheme", "framework", "mu"]]
    return frame.merge(best, on=["dataset", "k_list", "scheme", "framework", "mu"], how="inner")


def _format_cell(mean: float, std: float) -> str:
    return f"{100 * mean:.2f}±{100 * std:.2f}"


def results_table(rows) -> pd.DataFrame:
    """
    One row per (framework, dataset), one column per scheme

    Cells hold "mean±std" error rates in percent for classification and
    "accuracy (nmi)" in percent for clustering.
    """
    frame = at_optimal_mu(rows)
    if frame.empty:
        return pd.DataFrame(columns=["framework", "dataset"])
    summary = summarize(frame, [key for key in CELL_KEYS if key != "mu"])
    index = ["framework", "dataset"]
    if summary["k_list"].nunique() > 1:
        index.append("k_list")

    cells = {}
    for keys, group in summary.groupby(index + ["scheme"], sort=True):
        by_metric = group.set_index("metric")
        if "error_rate" in by_metric.index:
            text = _format_cell(by_metric.at["error_rate", "mean"], by_metric.at["error_rate", "std"])
        else:
            text = (
                f"{100 * by_metric.at['accuracy', 'mean']:.2f} "
                f"({100 * by_metric.at['nmi', 'mean']:.2f})"
            )
        cells[keys] = text

    table = pd.Series(cells)
    table.index.names = index + ["scheme"]
    return table.unstack("scheme").reset_index()


def plot_data(rows) -> pd.DataFrame:
    """Mean of every metric per (scheme, framework), one metric per column"""
    frame = at_optimal_mu(rows)
    if frame.empty:
        return pd.DataFrame(columns=["scheme", "framework"])
    pivot = frame.pivot_table(index=["scheme", "framework"], columns="metric", values="value", aggfunc="mean")
    pivot.columns.name = None
    return pivot.reset_index()


def choice_impact(rows) -> pd.DataFrame:
    """
    Improvement of the best over the worst choice, per metric

    The framework factor averages cells over schemes, the scheme factor
    averages over frameworks, and the combination compares single cells.
    """
    frame = at_optimal_mu(rows)
    columns = ["metric", "factor", "best", "best_value", "worst", "worst_value", "improvement"]
    if frame.empty:
        return pd.DataFrame(columns=columns)

    cells = frame.groupby(["scheme", "framework", "metric"], sort=True)["value"].mean().reset_index()
    cells["combination"] = cells["scheme"] + "/" + cells["framework"]

    records = []
    for metric, group in cells.groupby("metric", sort=True):
        lower_is_better = metric == "error_rate"
        for factor in ("framework", "scheme", "combination"):
            means = group.groupby(factor, sort=True)["value"].mean()
            best = means.idxmin() if lower_is_better else means.idxmax()
            worst = means.idxmax() if lower_is_better else means.idxmin()
            records.append({
                "metric": metric,
                "factor": factor,
                "best": best,
                "best_value": float(means[best]),
                "worst": worst,
                "worst_value": float(means[worst]),
                "improvement": float(abs(means[best] - means[worst])),
            })
    return pd.DataFrame(records, columns=columns)


def companion_path(output_path, kind: str) -> Path:
    """results.csv -> results.<kind>.csv"""
    output_path = Path(output_path)
    return output_path.with_name(f"{output_path.stem}.{kind}.csv")


def _write(frame: pd.DataFrame, path: Path):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as e:
        raise DataError(f"cannot write results to '{path}': {str(e)}") from e


def emit_results(rows: Sequence[ResultRow], output_path, companions: bool = True) -> List[Path]:
    """
    Write the result CSV and its companion files

    Args:
        rows: Result rows in any order
        output_path: Main CSV path
        companions: Also write .plot, .table, .impact and .optimal_mu files

    Returns:
        Paths written
    """
    output_path = Path(output_path)
    frame = rows_to_frame(rows)
    _write(frame, output_path)
    written = [output_path]

    if companions and not frame.empty:
        outputs = {
            "plot": plot_data(frame),
            "table": results_table(frame),
        }
        if frame.groupby(["scheme", "framework"]).ngroups > 1:
            outputs["impact"] = choice_impact(frame)
        if competing_mu(frame):
            outputs["optimal_mu"] = select_optimal_mu(frame)
        for kind, companion in outputs.items():
            path = companion_path(output_path, kind)
            _write(companion, path)
            written.append(path)

    app_logger.info(f"[RESULTS] wrote {len(frame)} rows to {output_path}")
    return written


def read_results(path) -> List[ResultRow]:
    """Read a result CSV back into rows"""
    try:
        frame = pd.read_csv(path, dtype={"k_list": str, "dataset": str})
    except (OSError, pd.errors.ParserError) as e:
        raise DataError(f"cannot read results '{path}': {str(e)}") from e
    return [ResultRow(**record) for record in frame.to_dict(orient="records")]
