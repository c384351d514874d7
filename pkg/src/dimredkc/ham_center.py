"""Dimension-reduced l-center for Hamming inputs.

The farthest-first traversal runs directly on squared projected distances
(the surrogate for the Hamming distance), never touching original-space
distances inside the loop: one surrogate row per chosen center, with the
per-point running minimum and nearest-center index maintained
incrementally.  Only the final covering radius is recomputed exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    CenterSolution,
    ClusteringSolution,
    Metric,
    PointSet,
    evaluate_center_solution,
    evaluate_clustering,
)
from .projection import generate, project, sq_distance_rows, target_dimension


@dataclass
class SurrogateDistanceState:
    """Surrogate-distance bookkeeping of one traversal.

    `w_rows[q]` is the row of squared projected distances from chosen
    center q to every point; `current_min`/`current_nearest` hold, for each
    point, the smallest surrogate distance to a chosen center and that
    center's index (earliest chosen center wins ties); `r_w` is the final
    maximal current_min.
    """

    w_rows: dict[int, np.ndarray]
    current_min: np.ndarray
    current_nearest: np.ndarray
    r_w: float

    @property
    def rows_computed(self) -> int:
        return len(self.w_rows)


def dimred_ham_center(
    points: PointSet,
    ell: int,
    epsilon_internal: float,
    seed: int,
    beta: float = 1.0,
    timings: Optional[dict] = None,
) -> tuple[CenterSolution, SurrogateDistanceState]:
    """Farthest-first traversal on the surrogate distances.

    The first center is point 0; each further center maximizes the current
    minimum surrogate distance to the chosen set, ties toward the lowest
    index.  Exactly ell surrogate rows are materialized.  The returned
    radius is the exact Hamming covering radius.
    """
    if points.metric is not Metric.HAMMING:
        raise ValueError("dimred_ham_center requires Hamming input")
    n = points.n
    if n <= ell:
        raise ValueError(f"need n > ell, got n={n}, ell={ell}")
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    if not 0.0 < epsilon_internal < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon_internal}")

    t0 = time.perf_counter()
    k = target_dimension(n, epsilon_internal, beta)
    pmap = generate(seed, k, points.dim)
    images = project(points, pmap).images
    t1 = time.perf_counter()

    chosen = [0]
    chosen_mask = np.zeros(n, dtype=bool)
    chosen_mask[0] = True
    row = sq_distance_rows(images, 0)
    w_rows = {0: row}
    current_min = row.copy()
    current_nearest = np.zeros(n, dtype=np.int64)
    for _ in range(ell - 1):
        masked = np.where(chosen_mask, -1.0, current_min)
        m = int(masked.argmax())
        chosen.append(m)
        chosen_mask[m] = True
        row = sq_distance_rows(images, m)
        w_rows[m] = row
        improved = row < current_min
        current_nearest[improved] = m
        np.minimum(current_min, row, out=current_min)
    t2 = time.perf_counter()

    radius = evaluate_center_solution(points, chosen)
    t3 = time.perf_counter()
    if timings is not None:
        timings.update(project=t1 - t0, solve=t2 - t1, pullback=t3 - t2)

    state = SurrogateDistanceState(
        w_rows=w_rows,
        current_min=current_min,
        current_nearest=current_nearest,
        r_w=float(current_min.max()),
    )
    solution = CenterSolution(
        center_indices=tuple(chosen),
        radius=radius,
        assignment=tuple(int(c) for c in current_nearest),
    )
    return solution, state


def two_plus_eps_ham(
    points: PointSet, ell: int, epsilon: float, seed: int, beta: float = 1.0
) -> CenterSolution:
    """(2+eps)-approximate conservative l-center in Hamming space w.h.p.
    (internal distortion eps/5)."""
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon}")
    solution, _ = dimred_ham_center(points, ell, epsilon / 5.0, seed, beta)
    return solution


def ham_min_diameter(
    points: PointSet, ell: int, epsilon: float, seed: int, beta: float = 1.0
) -> ClusteringSolution:
    """(2+eps)-approximate minimum-diameter l-clustering in Hamming space.

    Clusters group points by their nearest center under the surrogate
    distances, as maintained during the traversal; the reported diameter is
    recomputed exactly.
    """
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon}")
    solution, state = dimred_ham_center(points, ell, epsilon / 5.0, seed, beta)
    clusters = tuple(
        tuple(np.flatnonzero(state.current_nearest == c).tolist())
        for c in solution.center_indices
    )
    return ClusteringSolution(
        clusters=clusters, max_diameter=evaluate_clustering(points, clusters)
    )
