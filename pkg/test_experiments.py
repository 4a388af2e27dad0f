"""
Tests for experiment configuration, dataset loading, the runner and result files
"""
import numpy as np
import pandas as pd
import pytest

from config.settings import settings
from src.experiments import (
    ExperimentRunner,
    ResultRow,
    at_optimal_mu,
    build_config,
    choice_impact,
    companion_path,
    competing_mu,
    emit_results,
    load_config,
    load_dataset,
    read_results,
    results_table,
    run_classification,
    run_clustering,
    select_optimal_mu,
    sweep_mu,
)
from src.utils.errors import ConfigurationError, DataError, StratificationError


def write(path, text: str):
    path.write_text(text, encoding="utf-8")
    return path


def blob_config(blob_files, **values):
    features, labels = blob_files
    base = {"dataset_path": features, "labels_path": labels, "k_list": [6], "dataset": "blobs"}
    base.update(values)
    return build_config(base)


def row(scheme="sum", framework="zhou", mu=1.0, fold=1, metric="error_rate", value=0.1, k_list="5"):
    return ResultRow(
        dataset="toy", scheme=scheme, framework=framework, k_list=k_list,
        mu=mu, fold=fold, metric=metric, value=value,
    )


# datasets

def test_load_dataset(tmp_path):
    features = write(tmp_path / "x.csv", "0,0\n1,0\n0,1\n")
    labels = write(tmp_path / "y.txt", "0\n0\n1\n")
    samples, y = load_dataset(features, labels)
    np.testing.assert_array_equal(samples.values, [[0, 0], [1, 0], [0, 1]])
    np.testing.assert_array_equal(y, [0, 0, 1])


def test_load_dataset_row_errors(tmp_path):
    labels = write(tmp_path / "y.txt", "0\n0\n1\n")
    with pytest.raises(DataError, match="line 2"):
        load_dataset(write(tmp_path / "long.csv", "0,0\n1,0,5\n0,1\n"), labels)
    with pytest.raises(DataError, match="line 2"):
        load_dataset(write(tmp_path / "short.csv", "0,0\n1\n0,1\n"), labels)
    with pytest.raises(DataError, match="row 3, column 2"):
        load_dataset(write(tmp_path / "text.csv", "0,0\n1,0\n0,abc\n"), labels)


def test_load_dataset_label_errors(tmp_path):
    features = write(tmp_path / "x.csv", "0,0\n1,0\n0,1\n")
    with pytest.raises(DataError, match="3 samples"):
        load_dataset(features, write(tmp_path / "short.txt", "0\n1\n"))
    with pytest.raises(DataError, match="line 2"):
        load_dataset(features, write(tmp_path / "frac.txt", "0\n1.5\n1\n"))
    with pytest.raises(DataError, match="not found"):
        load_dataset(features, tmp_path / "missing.txt")


def test_load_dataset_renumbers_classes(tmp_path):
    features = write(tmp_path / "x.csv", "0,0\n1,0\n0,1\n")
    _, y = load_dataset(features, write(tmp_path / "y.txt", "7\n3\n7\n"))
    np.testing.assert_array_equal(y, [1, 0, 1])


# configuration

def test_load_config_file(tmp_path, blob_files):
    config = write(tmp_path / "exp.cfg", "\n".join([
        "# blobs experiment",
        "dataset_path = blobs.csv",
        "labels_path = blobs.labels   # one id per line",
        "task = cluster",
        "scheme = sum, volume_gram",
        "framework = all",
        "k_list = 5,10",
        "lambda = 0.5",
        "",
    ]))
    cfg = load_config(config)
    assert cfg.dataset_path == blob_files[0]
    assert cfg.task == "cluster"
    assert cfg.scheme == ["sum", "volume-gram"]
    assert cfg.framework == ["zhou", "clique", "star"]
    assert cfg.k_list == [5, 10]
    assert cfg.lam == 0.5
    assert cfg.dataset_name == "blobs"
    assert cfg.folds == settings.DEFAULT_FOLDS


def test_load_config_overrides_and_presets(tmp_path, blob_files):
    config = write(tmp_path / "exp.cfg", "dataset_path = blobs.csv\nlabels_path = blobs.labels\nmu = 2\n")
    cfg = load_config(config, {"mu": 0.5, "scheme": "paper", "seed": None})
    assert cfg.mu == 0.5
    assert cfg.scheme == settings.PAPER_SCHEMES
    assert cfg.seed == settings.DEFAULT_SEED

    preset = load_config(config, {"preset": "caltech256", "task": "cluster"})
    assert preset.k_list == [3, 5, 10, 15, 20]
    assert preset.task_k_list == [50, 100]
    assert preset.dataset_name == "caltech256"

    explicit = load_config(config, {"preset": "orl", "k_list": "7"})
    assert explicit.k_list == [7]


def test_load_config_errors(tmp_path, blob_files):
    with pytest.raises(ConfigurationError, match="unknown key 'colour'"):
        load_config(write(tmp_path / "a.cfg", "dataset_path = blobs.csv\ncolour = red\n"))
    with pytest.raises(ConfigurationError, match="line 1"):
        load_config(write(tmp_path / "b.cfg", "dataset_path blobs.csv\n"))
    base = "dataset_path = blobs.csv\nlabels_path = blobs.labels\n"
    with pytest.raises(ConfigurationError, match="folds"):
        load_config(write(tmp_path / "c.cfg", base + "folds = 1\n"))
    with pytest.raises(ConfigurationError, match="scheme"):
        load_config(write(tmp_path / "d.cfg", base + "scheme = entropy\n"))
    with pytest.raises(ConfigurationError, match="framework"):
        load_config(write(tmp_path / "e.cfg", base + "framework = hyperwalk\n"))
    with pytest.raises(ConfigurationError, match="does not exist"):
        load_config(write(tmp_path / "f.cfg", "dataset_path = none.csv\nlabels_path = blobs.labels\n"))
    with pytest.raises(ConfigurationError, match="preset"):
        load_config(write(tmp_path / "g.cfg", base + "preset = mnist\n"))
    with pytest.raises(ConfigurationError, match="llre_aggregator"):
        load_config(write(tmp_path / "h.cfg", base + "llre_aggregator = median\n"))
    with pytest.raises(ConfigurationError, match="sum_aggregator"):
        load_config(write(tmp_path / "i.cfg", base + "sum_aggregator = max\n"))
    assert load_config(write(tmp_path / "j.cfg", base + "llre_aggregator = MIN\n")).llre_aggregator == "min"


# runner

def test_clustering_grid_on_blobs(blob_files):
    cfg = blob_config(blob_files, task="cluster", scheme="all", framework="all")
    rows = run_clustering(cfg)
    assert len(rows) == len(settings.SCHEMES) * len(settings.FRAMEWORKS) * 2
    assert {(r.scheme, r.framework) for r in rows} == {
        (s, f) for s in settings.SCHEMES for f in settings.FRAMEWORKS
    }
    for result in rows:
        assert result.fold == 0
        assert result.value == pytest.approx(1.0)


def test_classification_grid_on_blobs(blob_files):
    cfg = blob_config(blob_files, scheme="all", framework="all", folds=2)
    rows = run_classification(cfg)
    assert len(rows) == len(settings.SCHEMES) * len(settings.FRAMEWORKS) * 2
    assert {r.fold for r in rows} == {1, 2}
    assert all(r.metric == "error_rate" and r.value == 0.0 for r in rows)


def test_splits_are_stratified_partitions(blob_files):
    runner = ExperimentRunner(blob_config(blob_files, folds=4))
    splits = runner.splits()
    tests = np.concatenate([test for _, test in splits])
    assert sorted(tests.tolist()) == list(range(60))
    for train, test in splits:
        assert set(train).isdisjoint(test)
        counts = np.bincount(runner.labels[test], minlength=3)
        assert counts.max() - counts.min() <= 1


def test_too_many_folds(blob_files):
    with pytest.raises(StratificationError):
        run_classification(blob_config(blob_files, folds=21))


def test_train_fraction_splits(blob_files):
    cfg = blob_config(blob_files, folds=3, train_fraction=0.3)
    runner = ExperimentRunner(cfg)
    splits = runner.splits()
    assert len(splits) == 3
    assert all(len(train) == 18 for train, _ in splits)
    rows = runner.run_classification()
    assert sorted({r.fold for r in rows}) == [1, 2, 3]


def test_per_fold_mu_tuning(blob_files):
    cfg = blob_config(blob_files, scheme="sum", mu_grid=[2.0, 0.5])
    rows = ExperimentRunner(cfg).run_classification()
    assert len(rows) == 2
    assert all(r.mu == 0.5 for r in rows)


def test_sweep_mu(blob_files):
    cfg = blob_config(blob_files, task="cluster", scheme="sum,trace", framework="zhou")
    rows = sweep_mu(cfg, [10.0, 0.1, 1.0])
    assert len(rows) == 3 * 2 * 2
    optimal = select_optimal_mu(rows)
    assert len(optimal) == 2
    assert optimal["mu"].tolist() == [0.1, 0.1]

    single = ExperimentRunner(cfg).sweep_mu([1.0])
    assert single == ExperimentRunner(cfg).run()


def test_select_k(blob_files):
    cfg = blob_config(blob_files, scheme="binary")
    best_k, rows = ExperimentRunner(cfg).select_k([6, 4])
    errors = {
        k: np.mean([r.value for r in rows if r.k_list == str(k)]) for k in (4, 6)
    }
    expected = 4 if errors[4] <= errors[6] else 6
    assert best_k == expected


def test_runs_are_deterministic(blob_files, tmp_path):
    cfg = blob_config(blob_files, scheme="sum,llre", framework="zhou,star")
    first = emit_results(run_classification(cfg), tmp_path / "first.csv")
    second = emit_results(run_classification(cfg), tmp_path / "second.csv")
    assert first[0].read_bytes() == second[0].read_bytes()


# result files

def test_emit_empty_rows(tmp_path):
    path = tmp_path / "out" / "empty.csv"
    assert emit_results([], path) == [path]
    assert path.read_text() == "dataset,scheme,framework,k_list,mu,fold,metric,value,seconds\n"


def test_emit_single_row_round_trip(tmp_path):
    original = row(value=0.123456789012345, k_list=[10, 20])
    path = tmp_path / "one.csv"
    emit_results([original], path, companions=False)
    assert read_results(path) == [original]


def test_emit_sorts_and_writes_companions(tmp_path):
    rows = [
        row(scheme="trace", framework="zhou", fold=2, value=0.2),
        row(scheme="sum", framework="star", fold=1, value=0.1),
        row(scheme="sum", framework="star", fold=2, value=0.3),
        row(scheme="trace", framework="zhou", fold=1, value=0.0),
    ]
    path = tmp_path / "grid.csv"
    written = emit_results(rows, path)
    assert companion_path(path, "plot") in written
    assert companion_path(path, "table") in written
    assert companion_path(path, "impact") in written

    frame = pd.read_csv(path)
    assert frame["scheme"].tolist() == ["sum", "sum", "trace", "trace"]
    assert frame["fold"].tolist() == [1, 2, 1, 2]

    plot = pd.read_csv(companion_path(path, "plot"))
    assert plot.set_index("scheme").at["sum", "error_rate"] == pytest.approx(0.2)


def test_results_table_layout():
    rows = [row(fold=1, value=0.1), row(fold=2, value=0.3)]
    table = results_table(rows)
    assert table.columns.tolist() == ["framework", "dataset", "sum"]
    assert table.at[0, "sum"] == "20.00±14.14"

    clustering = [row(metric="accuracy", fold=0, value=0.9), row(metric="nmi", fold=0, value=0.8)]
    assert results_table(clustering).at[0, "sum"] == "90.00 (80.00)"


def test_tuned_folds_with_different_mu_are_pooled(tmp_path):
    rows = [row(mu=0.1, fold=1, value=0.1), row(mu=10.0, fold=2, value=0.3)]
    assert not competing_mu(rows)
    assert len(at_optimal_mu(rows)) == 2
    assert results_table(rows).at[0, "sum"] == "20.00±14.14"

    path = tmp_path / "tuned.csv"
    written = emit_results(rows, path)
    assert companion_path(path, "optimal_mu") not in written
    plot = pd.read_csv(companion_path(path, "plot"))
    assert plot.at[0, "error_rate"] == pytest.approx(0.2)

    swept = rows + [row(mu=10.0, fold=1, value=0.5), row(mu=0.1, fold=2, value=0.1)]
    assert competing_mu(swept)
    assert set(at_optimal_mu(swept)["mu"]) == {0.1}
    assert companion_path(path, "optimal_mu") in emit_results(swept, path)


def test_select_optimal_mu_tie_and_best():
    rows = [
        row(mu=1.0, value=0.2), row(mu=0.5, value=0.2), row(mu=2.0, value=0.4),
        row(framework="star", mu=1.0, value=0.1), row(framework="star", mu=2.0, value=0.05),
    ]
    optimal = select_optimal_mu(rows).set_index("framework")
    assert optimal.at["zhou", "mu"] == 0.5
    assert optimal.at["star", "mu"] == 2.0
    assert optimal.at["star", "score"] == pytest.approx(0.95)


def test_choice_impact():
    rows = [
        row(scheme="sum", framework="zhou", value=0.1),
        row(scheme="sum", framework="star", value=0.3),
        row(scheme="llre", framework="zhou", value=0.2),
        row(scheme="llre", framework="star", value=0.6),
    ]
    impact = choice_impact(rows).set_index("factor")
    assert impact.at["framework", "best"] == "zhou"
    assert impact.at["framework", "improvement"] == pytest.approx(0.3)
    assert impact.at["scheme", "best"] == "sum"
    assert impact.at["scheme", "improvement"] == pytest.approx(0.2)
    assert impact.at["combination", "best"] == "sum/zhou"
    assert impact.at["combination", "improvement"] == pytest.approx(0.5)


def test_result_row_validation():
    with pytest.raises(ValueError):
        row(metric="f1")
    with pytest.raises(ValueError):
        row(value=1.5)
