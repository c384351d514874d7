"""Wall-clock scaling harness for the dimension-reduced center pipeline.

Times each phase of the reduced pipeline (project / solve / pullback) on
synthetic Gaussian data over a grid of (n, d, ell) cells, next to a
no-projection farthest-first control.  The point of the exercise: the
solve phase runs on k-dimensional images, so its cost must stay flat as d
grows, while the control scales linearly with d.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import Metric, PointSet, evaluate_center_solution
from .gonzalez import gonzalez
from .projection import generate, project, target_dimension


@dataclass(frozen=True)
class BenchCell:
    n: int
    d: int
    ell: int


BENCH_FIELDS = (
    "n",
    "d",
    "ell",
    "epsilon",
    "seed",
    "k",
    "project_seconds",
    "solve_seconds",
    "pullback_seconds",
    "total_seconds",
    "control_seconds",
    "reduced_radius",
    "radius",
)


def _median_time(fn, repeats: int) -> tuple[float, object]:
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def bench_scaling(
    cells: Iterable[BenchCell | tuple[int, int, int]],
    epsilon: float = 0.25,
    seed: int = 0,
    beta: float = 1.0,
    repeats: int = 3,
) -> list[dict]:
    """Run the grid and return one row of timings per cell.

    Seeding: cell i draws its Gaussian data from the i-th child of
    SeedSequence(seed); the projection uses `seed` directly, so projected
    instances are reproducible independently of grid order.  The solve and
    control phases are re-run `repeats` times and the median is reported;
    the projection is timed once (it dominates and is not noise-limited).
    """
    cells = [c if isinstance(c, BenchCell) else BenchCell(*c) for c in cells]
    children = np.random.SeedSequence(seed).spawn(len(cells))
    rows = []
    for cell, child in zip(cells, children):
        rng = np.random.default_rng(child)
        points = PointSet(rng.normal(size=(cell.n, cell.d)), Metric.EUCLIDEAN)

        t0 = time.perf_counter()
        k = target_dimension(cell.n, epsilon, beta)
        pmap = generate(seed, k, cell.d)
        projected = project(points, pmap)
        t_project = time.perf_counter() - t0

        reduced = PointSet(
            projected.images[list(projected.distinct_indices)], Metric.EUCLIDEAN
        )
        ell_prime = min(cell.ell, reduced.n)
        t_solve, reduced_sol = _median_time(lambda: gonzalez(reduced, ell_prime), repeats)

        t0 = time.perf_counter()
        centers = [projected.distinct_indices[j] for j in reduced_sol.center_indices]
        radius = evaluate_center_solution(points, centers)
        t_pullback = time.perf_counter() - t0

        t_control, _ = _median_time(lambda: gonzalez(points, cell.ell), repeats)

        rows.append(
            {
                "n": cell.n,
                "d": cell.d,
                "ell": cell.ell,
                "epsilon": epsilon,
                "seed": seed,
                "k": k,
                "project_seconds": t_project,
                "solve_seconds": t_solve,
                "pullback_seconds": t_pullback,
                "total_seconds": t_project + t_solve + t_pullback,
                "control_seconds": t_control,
                "reduced_radius": reduced_sol.radius,
                "radius": radius,
            }
        )
    return rows


def write_bench_csv(rows: Sequence[dict], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
