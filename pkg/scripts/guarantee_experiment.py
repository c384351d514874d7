#!/usr/bin/env python3
"""Measure empirical guarantee margins against the brute-force oracles.

For each solver this runs many random desk-scale instances and reports the
distribution of radius / optimum (or diameter / optimum) ratios next to
the proven bound.  Useful for eyeballing how much slack the worst-case
factors leave in practice.
"""

import argparse
import sys

import numpy as np

from dimredkc import (
    Metric,
    euclid_min_diameter,
    euclid_two_plus_eps,
    gonzalez,
    ham_min_diameter,
    opt_center_conservative,
    opt_center_outliers_conservative,
    opt_min_diameter,
    PointSet,
    three_plus_eps_out,
    two_plus_eps_ham,
)


def _random_points(rng, n, d, metric):
    if metric is Metric.HAMMING:
        return PointSet(rng.integers(0, 2, size=(n, d)), Metric.HAMMING)
    return PointSet(rng.normal(size=(n, d)), Metric.EUCLIDEAN)


def _summarize(name, bound, ratios):
    arr = np.array(ratios)
    print(
        f"{name:24s} bound {bound:.2f}  mean {arr.mean():.3f}  "
        f"p95 {np.percentile(arr, 95):.3f}  max {arr.max():.3f}  ({len(arr)} runs)"
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--epsilon", type=float, default=0.25)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    eps = args.epsilon
    rng = np.random.default_rng(args.seed)

    ratios = []
    for t in range(args.trials):
        pts = _random_points(rng, int(rng.integers(4, 11)), 4, Metric.EUCLIDEAN)
        ell = int(rng.integers(1, 4))
        opt = opt_center_conservative(pts, ell).radius
        if opt > 0:
            ratios.append(gonzalez(pts, ell).radius / opt)
    _summarize("gonzalez", 2.0, ratios)

    ratios = []
    for t in range(args.trials):
        pts = _random_points(rng, int(rng.integers(4, 11)), 100, Metric.EUCLIDEAN)
        ell = int(rng.integers(1, 4))
        opt = opt_center_conservative(pts, ell).radius
        if opt > 0:
            ratios.append(euclid_two_plus_eps(pts, ell, eps, seed=t).radius / opt)
    _summarize("euclid center", 2 + eps, ratios)

    ratios = []
    for t in range(args.trials):
        pts = _random_points(rng, int(rng.integers(4, 13)), 64, Metric.HAMMING)
        ell = int(rng.integers(1, 4))
        opt = opt_center_conservative(pts, ell).radius
        if opt > 0:
            ratios.append(two_plus_eps_ham(pts, ell, eps, seed=t).radius / opt)
    _summarize("hamming center", 2 + eps, ratios)

    for metric, solver, d in (
        (Metric.EUCLIDEAN, euclid_min_diameter, 50),
        (Metric.HAMMING, ham_min_diameter, 32),
    ):
        ratios = []
        for t in range(args.trials):
            pts = _random_points(rng, int(rng.integers(4, 9)), d, metric)
            opt = opt_min_diameter(pts, 2).max_diameter
            if opt > 0:
                ratios.append(solver(pts, 2, eps, seed=t).max_diameter / opt)
        _summarize(f"{metric.value} min-diameter", 2 + eps, ratios)

    for metric, d in ((Metric.EUCLIDEAN, 100), (Metric.HAMMING, 64)):
        ratios = []
        for t in range(args.trials):
            pts = _random_points(rng, int(rng.integers(5, 11)), d, metric)
            ell = int(rng.integers(1, 3))
            z = int(rng.integers(0, 3))
            opt = opt_center_outliers_conservative(pts, ell, z).radius
            if opt > 0:
                ratios.append(three_plus_eps_out(pts, ell, eps, z, seed=t).radius / opt)
        _summarize(f"{metric.value} outliers", 3 + eps, ratios)
    return 0


if __name__ == "__main__":
    sys.exit(main())
