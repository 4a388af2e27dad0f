"""
Dataset loading - comma-separated features (no header) and one integer label per line
"""
import re
from pathlib import Path
from typing import Tuple

import numpy as np
import pandas as pd

from src.hypergraph.generation import SampleMatrix
from src.utils.errors import DataError
from src.utils.logger import app_logger


def _read_cells(path: Path, what: str) -> pd.DataFrame:
    """Read a header-less CSV as strings, keeping blank lines so row index + 1 is the line number"""
    try:
        frame = pd.read_csv(path, header=None, dtype=str, skip_blank_lines=False, keep_default_na=False,
                            na_values=[""])
    except FileNotFoundError as e:
        raise DataError(f"{what} file '{path}' not found") from e
    except pd.errors.EmptyDataError as e:
        raise DataError(f"{what} file '{path}' is empty") from e
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        where = f"line {match.group(1)}" if match else "an unknown line"
        raise DataError(f"{what} file '{path}': row at {where} has too many fields ({str(e).strip()})") from e
    except OSError as e:
        raise DataError(f"cannot read {what} file '{path}': {str(e)}") from e

    blank = frame.isna().all(axis=1)
    frame = frame[~blank]
    if frame.empty:
        raise DataError(f"{what} file '{path}' has no data rows")
    return frame


def _check_complete(frame: pd.DataFrame, path: Path, what: str):
    missing = frame.isna()
    for index in frame.index[missing.any(axis=1)]:
        row = missing.loc[index].to_numpy()
        first = int(np.argmax(row))
        if row[first:].all():
            raise DataError(
                f"{what} file '{path}', line {index + 1}: expected {frame.shape[1]} fields, found {first}"
            )
        raise DataError(f"{what} file '{path}', line {index + 1}, column {first + 1}: empty value")


def _to_numbers(frame: pd.DataFrame, path: Path, what: str) -> pd.DataFrame:
    text = frame.apply(lambda column: column.str.strip())
    numbers = text.apply(pd.to_numeric, errors="coerce")
    bad = numbers.isna() & text.notna()
    if bad.to_numpy().any():
        index, column = next(
            (i, c) for i in bad.index for c in bad.columns if bad.at[i, c]
        )
        raise DataError(
            f"{what} file '{path}', row {index + 1}, column {int(column) + 1}: "
            f"non-numeric value {text.at[index, column]!r}"
        )
    return numbers


def load_features(path) -> SampleMatrix:
    """Parse the feature CSV, one sample per row"""
    path = Path(path)
    frame = _read_cells(path, "features")
    _check_complete(frame, path, "features")
    numbers = _to_numbers(frame, path, "features")
    values = numbers.to_numpy(dtype=np.float64)
    finite = np.isfinite(values)
    if not finite.all():
        row, col = np.argwhere(~finite)[0]
        raise DataError(
            f"features file '{path}', row {int(numbers.index[row]) + 1}, column {col + 1}: non-finite value"
        )
    return SampleMatrix(values)


def load_labels(path) -> np.ndarray:
    """Parse one non-negative integer class id per line"""
    path = Path(path)
    frame = _read_cells(path, "labels")
    if frame.shape[1] != 1:
        raise DataError(f"labels file '{path}' must hold one value per line, found {frame.shape[1]} columns")
    numbers = _to_numbers(frame, path, "labels")[0]
    for index, value in numbers.items():
        if value != np.floor(value) or value < 0:
            raise DataError(f"labels file '{path}', line {index + 1}: {value!r} is not a class id")
    return numbers.to_numpy(dtype=np.int64)


def load_dataset(path, labels_path) -> Tuple[SampleMatrix, np.ndarray]:
    """
    Load samples and their class labels

    Class ids are kept when they already run 0..c-1; otherwise they are
    renumbered densely in ascending order.

    Args:
        path: Features CSV
        labels_path: Labels file

    Returns:
        (SampleMatrix, labels)
    """
    samples = load_features(path)
    labels = load_labels(labels_path)
    if labels.shape[0] != samples.num_samples:
        raise DataError(
            f"{samples.num_samples} samples in '{path}' but {labels.shape[0]} labels in '{labels_path}'"
        )

    classes, dense = np.unique(labels, return_inverse=True)
    if not np.array_equal(classes, np.arange(classes.size)):
        app_logger.info(f"[RUNNER] renumbering class ids {classes.tolist()} to 0..{classes.size - 1}")
        labels = dense.reshape(-1).astype(np.int64)

    app_logger.info(
        f"[RUNNER] loaded {samples.num_samples} samples x {samples.num_features} features, "
        f"{classes.size} classes"
    )
    return samples, labels
