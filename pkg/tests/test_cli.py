import json

import numpy as np
import pytest

from dimredkc import Metric, PointSet, save_points
from dimredkc.cli import (
    EXIT_BUDGET,
    EXIT_CONFIG,
    EXIT_DATA,
    EXIT_OK,
    ConfigError,
    RunConfig,
    config_from_args,
    build_parser,
    main,
    run,
)

from helpers import random_points


@pytest.fixture
def square_csv(tmp_path, square):
    path = tmp_path / "square.csv"
    save_points(square, path, "csv")
    return str(path)


@pytest.fixture
def ham_bits(tmp_path):
    rng = np.random.default_rng(7)
    pts = PointSet(rng.integers(0, 2, size=(8, 24)), Metric.HAMMING)
    path = tmp_path / "pts.bits"
    save_points(pts, path, "bits")
    return str(path), pts


def _config(square_csv, **kw):
    base = dict(
        input=square_csv, format="csv", metric=Metric.EUCLIDEAN,
        algorithm="gonzalez", ell=2,
    )
    base.update(kw)
    return RunConfig(**base)


class TestValidation:
    def test_seed_mandatory_for_randomized(self, square_csv):
        cfg = _config(square_csv, algorithm="dimred-center", epsilon=0.3)
        with pytest.raises(ConfigError, match="seed"):
            cfg.validate()

    def test_epsilon_range(self, square_csv):
        cfg = _config(square_csv, algorithm="dimred-center", epsilon=0.5, seed=1)
        with pytest.raises(ConfigError, match="epsilon"):
            cfg.validate()

    def test_z_only_for_outliers(self, square_csv):
        cfg = _config(square_csv, z=1)
        with pytest.raises(ConfigError, match="--z"):
            cfg.validate()
        cfg = _config(square_csv, algorithm="outliers", epsilon=0.3, seed=1)
        with pytest.raises(ConfigError, match="--z"):
            cfg.validate()

    def test_metric_algorithm_coherence(self, square_csv):
        cfg = _config(
            square_csv, algorithm="dimred-ham-center", epsilon=0.3, seed=1,
            metric=Metric.EUCLIDEAN,
        )
        with pytest.raises(ConfigError, match="hamming"):
            cfg.validate()


class TestRun:
    def test_gonzalez_square_radius(self, square_csv):
        report = run(_config(square_csv))
        assert report.radius == 10.0
        assert report.centers == (0, 1)
        assert report.schema == 1

    def test_ham_center_single(self, ham_bits):
        path, pts = ham_bits
        cfg = RunConfig(
            input=path, format="bits", metric=Metric.HAMMING,
            algorithm="dimred-ham-center", ell=1, epsilon=0.3, seed=5,
        )
        report = run(cfg)
        assert report.radius == pts.dists_from(0).max()
        assert report.centers == (0,)

    def test_outliers_reports_both_radii(self, ham_bits):
        path, _ = ham_bits
        cfg = RunConfig(
            input=path, format="bits", metric=Metric.HAMMING,
            algorithm="outliers", ell=2, epsilon=0.3, z=1, seed=5,
        )
        report = run(cfg)
        assert report.outlier_indices is not None
        assert report.surrogate_radius is not None

    def test_min_diameter_both_metrics(self, square_csv, ham_bits):
        rep = run(_config(square_csv, algorithm="min-diameter", epsilon=0.3, seed=2))
        assert rep.max_diameter is not None
        path, _ = ham_bits
        cfg = RunConfig(
            input=path, format="bits", metric=Metric.HAMMING,
            algorithm="min-diameter", ell=2, epsilon=0.3, seed=2,
        )
        assert run(cfg).max_diameter is not None

    def test_reproducible_centers(self, ham_bits):
        path, _ = ham_bits
        cfg = RunConfig(
            input=path, format="bits", metric=Metric.HAMMING,
            algorithm="dimred-ham-center", ell=3, epsilon=0.3, seed=11,
        )
        assert run(cfg).centers == run(cfg).centers

    def test_trials_mode_counts_violations(self, square_csv):
        cfg = _config(
            square_csv, algorithm="dimred-center", epsilon=0.3, seed=0, trials=5
        )
        report = run(cfg)
        assert report.trials == 5
        assert report.guarantee_factor == 2.3
        assert report.violations == 0


class TestMain:
    def test_exit_ok_and_json_report(self, square_csv, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main([
            "--input", square_csv, "--algo", "gonzalez", "--l", "2",
            "--out", str(out),
        ])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["schema"] == 1
        assert data["radius"] == 10.0
        assert data["centers"] == [0, 1]

    def test_csv_report(self, square_csv, capsys):
        code = main([
            "--input", square_csv, "--algo", "gonzalez", "--l", "2",
            "--report", "csv",
        ])
        assert code == EXIT_OK
        header, row = capsys.readouterr().out.strip().splitlines()
        assert header.split(",")[0] == "schema"
        assert row.split(",")[1] == "0;1"

    def test_exit_config(self, square_csv):
        code = main([
            "--input", square_csv, "--algo", "dimred-center", "--l", "2",
            "--epsilon", "0.5", "--seed", "1",
        ])
        assert code == EXIT_CONFIG

    def test_exit_data_missing_file(self, tmp_path):
        code = main([
            "--input", str(tmp_path / "nope.csv"), "--algo", "gonzalez", "--l", "1",
        ])
        assert code == EXIT_DATA

    def test_exit_data_malformed(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("1,2\nx,y\n")
        code = main(["--input", str(bad), "--algo", "gonzalez", "--l", "1"])
        assert code == EXIT_DATA

    def test_exit_budget(self, tmp_path):
        rng = np.random.default_rng(0)
        big = PointSet(rng.normal(size=(20, 3)))
        path = tmp_path / "big.csv"
        save_points(big, path, "csv")
        code = main([
            "--input", str(path), "--algo", "gonzalez", "--l", "2", "--trials", "2",
        ])
        assert code == EXIT_BUDGET

    def test_parser_accepts_all_documented_flags(self, square_csv):
        parser = build_parser()
        args = parser.parse_args([
            "--input", square_csv, "--format", "csv", "--metric", "euclidean",
            "--algo", "dimred-center", "--l", "2", "--epsilon", "0.3",
            "--beta", "1.0", "--seed", "3", "--trials", "1",
            "--out", "/tmp/x.json", "--report", "json",
        ])
        cfg = config_from_args(args)
        assert cfg.metric is Metric.EUCLIDEAN
        assert cfg.ell == 2


def test_thread_cap_env_var(square_csv, tmp_path, monkeypatch):
    monkeypatch.setenv("DIMREDKC_THREADS", "1")
    out = tmp_path / "r.json"
    code = main([
        "--input", square_csv, "--algo", "dimred-center", "--l", "2",
        "--epsilon", "0.3", "--seed", "0", "--out", str(out),
    ])
    assert code == EXIT_OK
    assert json.loads(out.read_text())["k"] > 0


def test_trials_mode_ham_outliers(tmp_path):
    rng = np.random.default_rng(23)
    pts = random_points(rng, 8, 24, Metric.HAMMING)
    path = tmp_path / "h.bits"
    save_points(pts, path, "bits")
    cfg = RunConfig(
        input=str(path), format="bits", metric=Metric.HAMMING,
        algorithm="outliers", ell=2, epsilon=0.3, z=1, seed=1, trials=3,
    )
    report = run(cfg)
    assert report.violations == 0
    assert report.guarantee_factor == pytest.approx(3.3)
