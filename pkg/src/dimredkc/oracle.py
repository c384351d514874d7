"""Exhaustive brute-force solvers: ground truth at desk scale.

Every oracle enumerates the full search space (center subsets in
lexicographic order, set partitions as restricted-growth strings, grid
placements) and keeps the first strict improvement, so optima and their
tie-breaks are reproducible.  Hard budget caps make refusal explicit
instead of silently truncating.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.spatial.distance import cdist

from .core import CenterSolution, ClusteringSolution, Metric, OutlierSolution, PointSet


class BudgetExceededError(RuntimeError):
    """The requested enumeration exceeds the oracle budget."""


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps beyond which oracles refuse to run.

    `max_partitions` also caps subset-enumeration counts (center subsets,
    center x outlier products, grid placements).
    """

    max_n: int = 16
    max_ell: int = 8
    max_z: int = 8
    max_partitions: int = 5_000_000


DEFAULT_BUDGET = OracleBudget()


def _check(budget: OracleBudget, **named: int) -> None:
    caps = {
        "n": budget.max_n,
        "ell": budget.max_ell,
        "z": budget.max_z,
        "count": budget.max_partitions,
    }
    for name, value in named.items():
        if value > caps[name]:
            raise BudgetExceededError(f"{name}={value} exceeds oracle budget {caps[name]}")


def opt_center_conservative(
    points: PointSet, ell: int, budget: OracleBudget = DEFAULT_BUDGET
) -> CenterSolution:
    """Exact conservative l-center optimum by enumerating all l-subsets;
    returns the lexicographically smallest optimal subset."""
    n = points.n
    if not 1 <= ell <= n:
        raise ValueError(f"need 1 <= ell <= n={n}, got {ell}")
    _check(budget, n=n, ell=ell, count=math.comb(n, ell))
    dist = points.pairwise()
    best_radius = math.inf
    best: tuple[int, ...] = ()
    for subset in itertools.combinations(range(n), ell):
        radius = dist[list(subset)].min(axis=0).max()
        if radius < best_radius:
            best_radius = float(radius)
            best = subset
    return CenterSolution(center_indices=best, radius=best_radius)


def _restricted_growth_strings(n: int, max_blocks: int) -> Iterator[np.ndarray]:
    """All partitions of [0, n) into at most max_blocks blocks, in
    lexicographic restricted-growth order."""
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)  # b[i] = max(a[:i]) , running prefix max
    while True:
        yield a
        i = n - 1
        while i > 0 and (a[i] >= b[i] + 1 or a[i] + 1 >= max_blocks):
            i -= 1
        if i == 0:
            return
        a[i] += 1
        b[i + 1 :] = np.maximum(b[i], a[i])
        a[i + 1 :] = 0


def partition_count(n: int, max_blocks: int) -> int:
    """Number of partitions of an n-set into at most max_blocks blocks."""
    # Stirling numbers of the second kind, summed over block counts.
    s = [[0] * (max_blocks + 1) for _ in range(n + 1)]
    s[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, max_blocks + 1):
            s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1]
    return sum(s[n][1:])


def opt_min_diameter(
    points: PointSet, ell: int, budget: OracleBudget = DEFAULT_BUDGET
) -> ClusteringSolution:
    """Exact minimum of the largest cluster diameter over all partitions
    into at most ell clusters; first optimal partition in RGS order wins."""
    n = points.n
    if not 1 <= ell <= n:
        raise ValueError(f"need 1 <= ell <= n={n}, got {ell}")
    _check(budget, n=n, ell=ell, count=partition_count(n, ell))
    dist = points.pairwise()
    best_diameter = math.inf
    best: tuple[tuple[int, ...], ...] = ()
    for rgs in _restricted_growth_strings(n, ell):
        diameter = 0.0
        for block in range(rgs.max() + 1):
            members = np.flatnonzero(rgs == block)
            if len(members) > 1:
                diameter = max(diameter, float(dist[np.ix_(members, members)].max()))
            if diameter >= best_diameter:
                break
        if diameter < best_diameter:
            best_diameter = diameter
            blocks = [tuple(np.flatnonzero(rgs == b).tolist()) for b in range(rgs.max() + 1)]
            blocks += [()] * (ell - len(blocks))
            best = tuple(blocks)
    return ClusteringSolution(clusters=best, max_diameter=best_diameter)


def opt_center_outliers_conservative(
    points: PointSet, ell: int, z: int, budget: OracleBudget = DEFAULT_BUDGET
) -> OutlierSolution:
    """Exact conservative optimum with up to z discarded points, by full
    enumeration of center subsets and (disjoint) outlier subsets."""
    n = points.n
    if not 1 <= ell <= n:
        raise ValueError(f"need 1 <= ell <= n={n}, got {ell}")
    if z < 0:
        raise ValueError(f"need z >= 0, got {z}")
    z_eff = min(z, n - ell)  # discarding a center is never useful
    _check(budget, n=n, ell=ell, z=z, count=math.comb(n, ell) * math.comb(n, z_eff))
    dist = points.pairwise()
    best_radius = math.inf
    best_centers: tuple[int, ...] = ()
    best_outliers: tuple[int, ...] = ()
    for centers in itertools.combinations(range(n), ell):
        md = dist[list(centers)].min(axis=0)
        rest = [i for i in range(n) if i not in centers]
        for outliers in itertools.combinations(rest, z_eff):
            keep = md[[i for i in range(n) if i not in outliers]]
            radius = float(keep.max())
            if radius < best_radius:
                best_radius = radius
                best_centers = centers
                best_outliers = outliers
    return OutlierSolution(
        center_indices=best_centers, outlier_indices=best_outliers, radius=best_radius
    )


@dataclass(frozen=True)
class GridBracket:
    """Lower/upper bracket of the unconstrained l-center optimum.

    `upper` is the best grid-restricted value (an upper bound on the true
    optimum); `lower` subtracts half the grid-cell diagonal, the largest
    amount by which snapping an arbitrary center to the grid can hurt.
    """

    lower: float
    upper: float
    grid_centers: tuple[tuple[float, ...], ...]


def opt_center_unconstrained_grid(
    points: PointSet,
    ell: int,
    grid_step: float,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> GridBracket:
    """Bracket the unconstrained l-center optimum by exhaustive search over
    a bounding-box grid of candidate centers (Euclidean, d <= 3)."""
    if points.metric is not Metric.EUCLIDEAN:
        raise ValueError("grid oracle requires Euclidean input")
    if points.dim > 3:
        raise ValueError(f"grid oracle requires d <= 3, got d={points.dim}")
    if grid_step <= 0:
        raise ValueError(f"grid_step must be positive, got {grid_step}")
    if not 1 <= ell <= points.n:
        raise ValueError(f"need 1 <= ell <= n={points.n}, got {ell}")
    axes = [
        np.arange(lo, hi + grid_step, grid_step)
        for lo, hi in zip(points.coords.min(axis=0), points.coords.max(axis=0))
    ]
    grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
    n_grid = len(grid)
    _check(budget, count=math.comb(n_grid, ell))
    dist = cdist(grid, points.coords)
    best_value = math.inf
    best: tuple[int, ...] = ()
    for subset in itertools.combinations(range(n_grid), ell):
        value = dist[list(subset)].min(axis=0).max()
        if value < best_value:
            best_value = float(value)
            best = subset
    slack = grid_step * math.sqrt(points.dim) / 2.0
    return GridBracket(
        lower=max(0.0, best_value - slack),
        upper=best_value,
        grid_centers=tuple(tuple(grid[g]) for g in best),
    )
