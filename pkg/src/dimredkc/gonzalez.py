"""Farthest-first traversal: the conservative 2-approximation for l-center."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CenterSolution,
    ClusteringSolution,
    PointSet,
    _check_indices,
    evaluate_clustering,
)


@dataclass
class FarthestFirstState:
    """Traversal state: chosen centers, per-point distance to the nearest
    chosen center, and the index of that center."""

    chosen: list[int]
    min_dist: np.ndarray
    nearest: np.ndarray


def gonzalez_traversal(points: PointSet, n_centers: int, first: int = 0) -> FarthestFirstState:
    """Run the farthest-first traversal and return the full state.

    Starts from `first`, then repeatedly adds the point with the largest
    distance to the chosen set.  Ties in the argmax break toward the lowest
    index; `nearest` keeps the earliest chosen center on distance ties.
    """
    n = points.n
    if not 1 <= n_centers <= n:
        raise ValueError(f"need 1 <= n_centers <= n={n}, got {n_centers}")
    if not 0 <= first < n:
        raise ValueError(f"first center {first} out of range [0, {n})")
    min_dist = points.dists_from(first)
    nearest = np.full(n, first, dtype=np.int64)
    chosen = [first]
    chosen_mask = np.zeros(n, dtype=bool)
    chosen_mask[first] = True
    while len(chosen) < n_centers:
        masked = np.where(chosen_mask, -1.0, min_dist)
        m = int(masked.argmax())
        chosen.append(m)
        chosen_mask[m] = True
        d = points.dists_from(m)
        improved = d < min_dist
        nearest[improved] = m
        np.minimum(min_dist, d, out=min_dist)
    return FarthestFirstState(chosen=chosen, min_dist=min_dist, nearest=nearest)


def gonzalez(points: PointSet, n_centers: int, first: int = 0) -> CenterSolution:
    """Conservative l-center solution with radius at most twice the optimum."""
    state = gonzalez_traversal(points, n_centers, first=first)
    return CenterSolution(
        center_indices=tuple(state.chosen),
        radius=float(state.min_dist.max()),
        assignment=tuple(int(c) for c in state.nearest),
    )


def assign_clusters(points: PointSet, centers) -> ClusteringSolution:
    """Partition points by nearest center, ties to the lowest center index.

    Diameters are recomputed exactly; the largest one is at most twice the
    covering radius of the centers by the triangle inequality.
    """
    idx = sorted(set(_check_indices(centers, points.n)))
    if not idx:
        raise ValueError("center set must be nonempty")
    dists = np.stack([points.dists_from(c) for c in idx])
    label = dists.argmin(axis=0)
    clusters = tuple(tuple(np.flatnonzero(label == j).tolist()) for j in range(len(idx)))
    return ClusteringSolution(clusters=clusters, max_diameter=evaluate_clustering(points, clusters))
