"""Command-line entry point: ingestion, dispatch, reproducible reports.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 oracle
budget exceeded.  The environment variable ``DIMREDKC_THREADS`` caps the
BLAS thread pools used internally.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import oracle
from .center_reduce import euclid_min_diameter, euclid_two_plus_eps
from .core import Metric, PointSet, evaluate_center_solution
from .gonzalez import gonzalez
from .ham_center import dimred_ham_center, ham_min_diameter, two_plus_eps_ham
from .outliers import dimred_cen_out, three_plus_eps_out
from .pointio import FORMATS, PointFormatError, load_points

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_BUDGET = 4

ALGORITHMS = ("gonzalez", "dimred-center", "dimred-ham-center", "min-diameter", "outliers")
RANDOMIZED = ("dimred-center", "dimred-ham-center", "min-diameter", "outliers")
REPORT_SCHEMA = 1


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass
class RunConfig:
    input: str
    format: str
    metric: Metric
    algorithm: str
    ell: int
    epsilon: Optional[float] = None
    z: Optional[int] = None
    beta: float = 1.0
    seed: Optional[int] = None
    trials: int = 1
    out: Optional[str] = None
    report: str = "json"

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if self.report not in ("json", "csv"):
            raise ConfigError(f"unknown report format {self.report!r}")
        if self.ell < 1:
            raise ConfigError(f"need --l >= 1, got {self.ell}")
        if self.trials < 1:
            raise ConfigError(f"need --trials >= 1, got {self.trials}")
        if self.algorithm in RANDOMIZED:
            if self.seed is None:
                raise ConfigError(f"--seed is mandatory for {self.algorithm}")
            if self.epsilon is None:
                raise ConfigError(f"--epsilon is mandatory for {self.algorithm}")
            if not 0.0 < self.epsilon < 0.5:
                raise ConfigError(f"--epsilon must be in (0, 0.5), got {self.epsilon}")
        if self.algorithm == "outliers":
            if self.z is None:
                raise ConfigError("--z is mandatory for outliers")
            if self.z < 0:
                raise ConfigError(f"need --z >= 0, got {self.z}")
        elif self.z is not None:
            raise ConfigError(f"--z is only valid for outliers, not {self.algorithm}")
        if self.algorithm == "dimred-center" and self.metric is not Metric.EUCLIDEAN:
            raise ConfigError("dimred-center requires --metric euclidean")
        if self.algorithm == "dimred-ham-center" and self.metric is not Metric.HAMMING:
            raise ConfigError("dimred-ham-center requires --metric hamming")

    def echo(self) -> dict:
        out = dataclasses.asdict(self)
        out["metric"] = self.metric.value
        return out


@dataclass
class RunReport:
    config: dict
    centers: tuple[int, ...]
    radius: float
    seed: Optional[int]
    timings: dict = field(default_factory=dict)
    surrogate_radius: Optional[float] = None
    k: Optional[int] = None
    ell_prime: Optional[int] = None
    max_diameter: Optional[float] = None
    outlier_indices: Optional[tuple[int, ...]] = None
    trials: int = 1
    guarantee_factor: Optional[float] = None
    violations: Optional[int] = None
    schema: int = REPORT_SCHEMA

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["centers"] = list(self.centers)
        if self.outlier_indices is not None:
            out["outlier_indices"] = list(self.outlier_indices)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        d = self.to_dict()
        cols = [
            "schema", "centers", "radius", "surrogate_radius", "k", "ell_prime",
            "max_diameter", "outlier_indices", "seed", "trials", "guarantee_factor",
            "violations", "project_seconds", "solve_seconds", "pullback_seconds",
        ]
        row = {
            "centers": ";".join(str(c) for c in self.centers),
            "outlier_indices": (
                ";".join(str(c) for c in self.outlier_indices)
                if self.outlier_indices is not None
                else ""
            ),
            "project_seconds": self.timings.get("project", ""),
            "solve_seconds": self.timings.get("solve", ""),
            "pullback_seconds": self.timings.get("pullback", ""),
        }
        values = [str(row.get(c, "" if d.get(c) is None else d.get(c))) for c in cols]
        return ",".join(cols) + "\n" + ",".join(values) + "\n"


def _run_once(config: RunConfig, points: PointSet, seed: Optional[int]) -> RunReport:
    algo = config.algorithm
    timings: dict = {}
    if algo == "gonzalez":
        t0 = time.perf_counter()
        sol = gonzalez(points, config.ell)
        timings = {"project": 0.0, "solve": time.perf_counter() - t0, "pullback": 0.0}
        return RunReport(
            config=config.echo(), centers=sol.center_indices, radius=sol.radius,
            seed=None, timings=timings,
        )
    assert seed is not None and config.epsilon is not None
    if algo == "dimred-center":
        from .center_reduce import dimred_center, gonzalez_subroutine

        sol, rep = dimred_center(
            points, config.ell, config.epsilon / 8.0, gonzalez_subroutine(), seed, config.beta
        )
        timings = {
            "project": rep.project_seconds,
            "solve": rep.solve_seconds,
            "pullback": rep.pullback_seconds,
        }
        return RunReport(
            config=config.echo(), centers=sol.center_indices, radius=sol.radius,
            seed=seed, timings=timings, surrogate_radius=rep.reduced_radius,
            k=rep.k, ell_prime=rep.ell_prime,
        )
    if algo == "dimred-ham-center":
        sol, state = dimred_ham_center(
            points, config.ell, config.epsilon / 5.0, seed, config.beta, timings=timings
        )
        return RunReport(
            config=config.echo(), centers=sol.center_indices, radius=sol.radius,
            seed=seed, timings=timings, surrogate_radius=state.r_w,
        )
    if algo == "min-diameter":
        t0 = time.perf_counter()
        if config.metric is Metric.EUCLIDEAN:
            clustering = euclid_min_diameter(points, config.ell, config.epsilon, seed, config.beta)
        else:
            clustering = ham_min_diameter(points, config.ell, config.epsilon, seed, config.beta)
        timings = {"project": 0.0, "solve": time.perf_counter() - t0, "pullback": 0.0}
        centers = tuple(c[0] for c in clustering.clusters if c)
        return RunReport(
            config=config.echo(), centers=centers,
            radius=evaluate_center_solution(points, centers), seed=seed,
            timings=timings, max_diameter=clustering.max_diameter,
        )
    if algo == "outliers":
        assert config.z is not None
        sol, trace = dimred_cen_out(points, config.ell, config.epsilon / 8.0, config.z, seed, beta=config.beta)
        timings = {
            "project": trace.project_seconds,
            "solve": trace.solve_seconds,
            "pullback": trace.pullback_seconds,
        }
        return RunReport(
            config=config.echo(), centers=sol.center_indices, radius=sol.radius,
            seed=seed, timings=timings, surrogate_radius=trace.surrogate_radius,
            k=trace.k, outlier_indices=sol.outlier_indices,
        )
    raise ConfigError(f"unknown algorithm {algo!r}")


def _guarantee_factor(config: RunConfig) -> float:
    if config.algorithm == "gonzalez":
        return 2.0
    if config.algorithm == "outliers":
        return 3.0 + config.epsilon
    return 2.0 + config.epsilon


def _oracle_value(config: RunConfig, points: PointSet) -> float:
    if config.algorithm == "min-diameter":
        return oracle.opt_min_diameter(points, config.ell).max_diameter
    if config.algorithm == "outliers":
        return oracle.opt_center_outliers_conservative(points, config.ell, config.z).radius
    return oracle.opt_center_conservative(points, config.ell).radius


def _objective(config: RunConfig, report: RunReport) -> float:
    if config.algorithm == "min-diameter":
        return report.max_diameter
    return report.radius


def run(config: RunConfig) -> RunReport:
    """Validate, load, dispatch, and (for trials > 1) count violations of
    the algorithm's guarantee against the brute-force oracle."""
    config.validate()
    points = load_points(config.input, config.format, config.metric)
    report = _run_once(config, points, config.seed)
    if config.trials > 1:
        factor = _guarantee_factor(config)
        opt = _oracle_value(config, points)
        violations = 0
        tol = 1e-9
        for t in range(config.trials):
            seed_t = None if config.seed is None else config.seed + t
            rep_t = _run_once(config, points, seed_t)
            if _objective(config, rep_t) > factor * opt * (1.0 + tol):
                violations += 1
        report.trials = config.trials
        report.guarantee_factor = factor
        report.violations = violations
    return report


def _write_report(report: RunReport, config: RunConfig) -> None:
    text = report.to_json() + "\n" if config.report == "json" else report.to_csv()
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimredkc",
        description="Approximate l-center clustering with randomized dimension reduction.",
    )
    parser.add_argument("--input", required=True, help="input point file")
    parser.add_argument("--format", default="csv", choices=FORMATS)
    parser.add_argument("--metric", default=None, choices=["euclidean", "hamming"])
    parser.add_argument("--algo", required=True, choices=ALGORITHMS)
    parser.add_argument("--l", dest="ell", type=int, required=True, help="number of centers")
    parser.add_argument("--epsilon", type=float, default=None)
    parser.add_argument("--z", type=int, default=None, help="outlier budget")
    parser.add_argument("--beta", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trials", type=int, default=1)
    parser.add_argument("--out", default=None, help="report path (default stdout)")
    parser.add_argument("--report", default="json", choices=["json", "csv"])
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.metric is None:
        metric = Metric.EUCLIDEAN if args.format == "csv" else Metric.HAMMING
    else:
        metric = Metric(args.metric)
    return RunConfig(
        input=args.input,
        format=args.format,
        metric=metric,
        algorithm=args.algo,
        ell=args.ell,
        epsilon=args.epsilon,
        z=args.z,
        beta=args.beta,
        seed=args.seed,
        trials=args.trials,
        out=args.out,
        report=args.report,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    threads = os.environ.get("DIMREDKC_THREADS")
    try:
        if threads:
            from threadpoolctl import threadpool_limits

            with threadpool_limits(limits=int(threads)):
                report = run(config)
        else:
            report = run(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (PointFormatError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except oracle.BudgetExceededError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    _write_report(report, config)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
