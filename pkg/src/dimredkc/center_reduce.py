"""Dimension-reduced l-center for Euclidean inputs.

Pipeline: project the points with a random sign matrix, solve l'-center on
the distinct images with any conservative subroutine, pull the chosen
images back to input points through the preimage dictionary, and pad with
unused points if the image set collapsed below l.  With Gonzalez as the
subroutine this yields a (2+eps)-approximation w.h.p.; the min-diameter
variant additionally assigns every point to the reduced-space center
closest to its image.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import (
    CenterSolution,
    ClusteringSolution,
    Metric,
    PointSet,
    evaluate_center_solution,
    evaluate_clustering,
)
from .gonzalez import gonzalez
from .projection import ProjectedSet, generate, project, target_dimension


@dataclass(frozen=True)
class ConservativeSubroutine:
    """Reduced-space solver contract.

    `solve(points, m)` must return m distinct indices into `points` (the
    centers are input points of the reduced instance); `alpha` is the
    solver's approximation factor, used only for reporting and bounds in
    tests.
    """

    name: str
    alpha: float
    solve: Callable[[PointSet, int], Sequence[int]]


def gonzalez_subroutine(first: int = 0) -> ConservativeSubroutine:
    """The farthest-first traversal as a conservative 2-approximate subroutine."""
    return ConservativeSubroutine(
        name="gonzalez",
        alpha=2.0,
        solve=lambda pts, m: gonzalez(pts, m, first=first).center_indices,
    )


def external_subroutine(
    name: str, alpha: float, solve: Callable[[PointSet, int], Sequence[int]]
) -> ConservativeSubroutine:
    """Attach point for third-party reduced-space solvers.

    Faster O(alpha)-approximate k-center algorithms from the literature can
    be plugged in here; this library ships none of their internals.  The
    callable must honor the ConservativeSubroutine contract (m distinct
    indices into the reduced instance).
    """
    return ConservativeSubroutine(name=name, alpha=alpha, solve=solve)


@dataclass(frozen=True)
class ReducedRunReport:
    """Diagnostics for one dimension-reduced run."""

    k: int
    ell_prime: int
    padded_count: int
    seed: int
    subroutine: str
    reduced_radius: float
    radius: float
    distinct_images: int
    project_seconds: float
    solve_seconds: float
    pullback_seconds: float


@dataclass(frozen=True)
class _ReducedSolve:
    projected: ProjectedSet
    reduced: PointSet
    reduced_centers: tuple[int, ...]
    original_centers: tuple[int, ...]
    k: int
    ell_prime: int
    project_seconds: float
    solve_seconds: float


def _check_params(points: PointSet, ell: int, epsilon: float) -> None:
    if points.n <= ell:
        raise ValueError(f"need n > ell, got n={points.n}, ell={ell}")
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon}")


def _reduce_and_solve(
    points: PointSet,
    ell: int,
    epsilon: float,
    subroutine: ConservativeSubroutine,
    seed: int,
    beta: float,
) -> _ReducedSolve:
    t0 = time.perf_counter()
    k = target_dimension(points.n, epsilon, beta)
    pmap = generate(seed, k, points.dim)
    projected = project(points, pmap)
    t1 = time.perf_counter()

    reduced = PointSet(projected.images[list(projected.distinct_indices)], Metric.EUCLIDEAN)
    ell_prime = min(ell, reduced.n)
    chosen = [int(j) for j in subroutine.solve(reduced, ell_prime)]
    t2 = time.perf_counter()

    if len(chosen) != ell_prime:
        raise ValueError(
            f"subroutine '{subroutine.name}' returned {len(chosen)} centers, expected {ell_prime}"
        )
    if len(set(chosen)) != len(chosen):
        raise ValueError(f"subroutine '{subroutine.name}' returned duplicate center indices")
    if any(not 0 <= j < reduced.n for j in chosen):
        raise ValueError(f"subroutine '{subroutine.name}' returned out-of-range center indices")

    originals = tuple(projected.distinct_indices[j] for j in chosen)
    return _ReducedSolve(
        projected=projected,
        reduced=reduced,
        reduced_centers=tuple(chosen),
        original_centers=originals,
        k=k,
        ell_prime=ell_prime,
        project_seconds=t1 - t0,
        solve_seconds=t2 - t1,
    )


def _pad_centers(chosen: Sequence[int], ell: int, n: int) -> tuple[int, ...]:
    """Extend to ell distinct centers with the lowest-index unused points."""
    out = list(chosen)
    used = set(out)
    i = 0
    while len(out) < ell:
        if i not in used:
            out.append(i)
            used.add(i)
        i += 1
    return tuple(out)


def dimred_center(
    points: PointSet,
    ell: int,
    epsilon: float,
    subroutine: ConservativeSubroutine,
    seed: int,
    beta: float = 1.0,
) -> tuple[CenterSolution, ReducedRunReport]:
    """Solve l-center on the projected instance and pull the centers back.

    Returns a conservative solution whose radius (recomputed exactly in the
    original space) is within (1+eps)(1+2eps)*alpha of the optimum w.h.p.,
    where alpha is the subroutine's factor.
    """
    if points.metric is not Metric.EUCLIDEAN:
        raise ValueError("dimred_center requires Euclidean input")
    _check_params(points, ell, epsilon)
    rs = _reduce_and_solve(points, ell, epsilon, subroutine, seed, beta)

    t0 = time.perf_counter()
    centers = _pad_centers(rs.original_centers, ell, points.n)
    radius = evaluate_center_solution(points, centers)
    t1 = time.perf_counter()

    report = ReducedRunReport(
        k=rs.k,
        ell_prime=rs.ell_prime,
        padded_count=ell - rs.ell_prime,
        seed=seed,
        subroutine=subroutine.name,
        reduced_radius=evaluate_center_solution(rs.reduced, rs.reduced_centers),
        radius=radius,
        distinct_images=rs.reduced.n,
        project_seconds=rs.project_seconds,
        solve_seconds=rs.solve_seconds,
        pullback_seconds=t1 - t0,
    )
    return CenterSolution(center_indices=centers, radius=radius), report


def euclid_two_plus_eps(
    points: PointSet, ell: int, epsilon: float, seed: int, beta: float = 1.0
) -> CenterSolution:
    """(2+eps)-approximate conservative l-center w.h.p.: the reduced pipeline
    with Gonzalez as the subroutine and eps/8 as the internal distortion."""
    _check_params(points, ell, epsilon)
    solution, _ = dimred_center(points, ell, epsilon / 8.0, gonzalez_subroutine(), seed, beta)
    return solution


def euclid_min_diameter(
    points: PointSet, ell: int, epsilon: float, seed: int, beta: float = 1.0
) -> ClusteringSolution:
    """(2+eps)-approximate minimum-diameter l-clustering w.h.p.

    Each point joins the reduced-space center closest to its image (the
    assignment happens entirely in the projected space); the reported
    diameter is recomputed exactly in the original space.  When the image
    set collapses below l the remaining clusters are empty.
    """
    if points.metric is not Metric.EUCLIDEAN:
        raise ValueError("euclid_min_diameter requires Euclidean input")
    _check_params(points, ell, epsilon)
    rs = _reduce_and_solve(points, ell, epsilon / 8.0, gonzalez_subroutine(), seed, beta)

    center_images = rs.reduced.coords[list(rs.reduced_centers)]
    dists = np.stack(
        [np.linalg.norm(rs.projected.images - c, axis=1) for c in center_images]
    )
    label = dists.argmin(axis=0)
    clusters = [np.flatnonzero(label == j).tolist() for j in range(rs.ell_prime)]
    clusters += [[] for _ in range(ell - rs.ell_prime)]
    clusters = tuple(tuple(c) for c in clusters)
    return ClusteringSolution(
        clusters=clusters, max_diameter=evaluate_clustering(points, clusters)
    )
