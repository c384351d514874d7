"""l-center clustering with z outliers via greedy disk cover on surrogate
distances.

One engine serves both metrics: the surrogate matrix holds projected l2
distances for Euclidean inputs and their squares for Hamming inputs.  The
decision procedure marks, for l rounds, the expansion set of the largest
remaining candidate disk; a binary search over all surrogate interdistances
and their (1+2*eps)-inflations finds the smallest candidate radius whose
verdict is YES.  Unmarked points of that verdict are the outliers.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .core import Metric, OutlierSolution, PointSet, min_dists_to
from .projection import generate, project, target_dimension


class SurrogateKind(enum.Enum):
    """Which function of the image distance stands in for the exact one."""

    EUCLIDEAN = "euclidean"  # ||f(u) - f(v)||_2
    HAMMING = "hamming"  # (||f(u) - f(v)||_2)^2

    @classmethod
    def for_metric(cls, metric: Metric) -> "SurrogateKind":
        return cls.EUCLIDEAN if metric is Metric.EUCLIDEAN else cls.HAMMING


@dataclass(frozen=True)
class SurrogateMatrix:
    """Symmetric nonnegative n x n matrix of surrogate interdistances."""

    values: np.ndarray
    kind: SurrogateKind

    @property
    def n(self) -> int:
        return self.values.shape[0]


def build_surrogate(images: np.ndarray, kind: SurrogateKind) -> SurrogateMatrix:
    """All-pairs surrogate distances of the image vectors (zero diagonal,
    exactly symmetric)."""
    n = images.shape[0]
    values = np.zeros((n, n))
    if n > 1:
        metric = "euclidean" if kind is SurrogateKind.EUCLIDEAN else "sqeuclidean"
        condensed = pdist(images, metric=metric)
        values = squareform(condensed)
    values.flags.writeable = False
    return SurrogateMatrix(values=values, kind=kind)


@dataclass(frozen=True)
class RadiusCandidateSet:
    """Sorted, deduplicated candidate radii: every surrogate interdistance
    and its (1+2*eps)-inflation."""

    values: np.ndarray

    @classmethod
    def from_surrogate(cls, surrogate: SurrogateMatrix, epsilon: float) -> "RadiusCandidateSet":
        flat = surrogate.values.ravel()
        values = np.unique(np.concatenate([flat, flat * (1.0 + 2.0 * epsilon)]))
        values.flags.writeable = False
        return cls(values=values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class GreedyVerdict:
    """Outcome of one decision call: YES iff at least n - z points were
    marked by the l selected expansion sets."""

    answer: bool
    centers: tuple[int, ...]
    covered_sets: tuple[tuple[int, ...], ...]
    covered_count: int

    def covered_mask(self, n: int) -> np.ndarray:
        mask = np.zeros(n, dtype=bool)
        for block in self.covered_sets:
            mask[list(block)] = True
        return mask


def greedy_cover(
    surrogate: SurrogateMatrix, ell: int, epsilon: float, z: int, r: float
) -> GreedyVerdict:
    """Greedy disk-cover decision at candidate radius r.

    Candidate disks G_i collect points with surrogate distance to point i
    at most r*(1+eps); expansion disks E_i use threshold 3*r*(1+eps).  For
    l rounds the unselected disk with the most unmarked points wins (ties
    to the lowest index), its expansion set is marked, and marked points
    stop counting for the remaining disks.  Selected rows stay marked-
    eligible as centers; only the rows themselves leave the pool.
    """
    if r < 0:
        raise ValueError(f"candidate radius must be nonnegative, got {r}")
    values = surrogate.values
    n = surrogate.n
    g_mask = values <= r * (1.0 + epsilon)
    e_mask = values <= 3.0 * r * (1.0 + epsilon)
    marked = np.zeros(n, dtype=bool)
    selectable = np.ones(n, dtype=bool)
    centers: list[int] = []
    covered_sets: list[tuple[int, ...]] = []
    for _ in range(ell):
        if not selectable.any():
            break
        sizes = (g_mask & ~marked).sum(axis=1)
        sizes[~selectable] = -1
        j = int(sizes.argmax())
        selectable[j] = False
        newly = e_mask[j] & ~marked
        covered_sets.append(tuple(np.flatnonzero(newly).tolist()))
        marked |= e_mask[j]
        centers.append(j)
    covered_count = int(marked.sum())
    return GreedyVerdict(
        answer=covered_count >= n - z,
        centers=tuple(centers),
        covered_sets=tuple(covered_sets),
        covered_count=covered_count,
    )


@dataclass(frozen=True)
class OutlierRunTrace:
    """Diagnostics for one outlier run: both the surrogate radius the
    decision procedure worked with and the exact one reported outward."""

    k: int
    seed: int
    kind: SurrogateKind
    epsilon_internal: float
    candidate_count: int
    chosen_candidate: float
    greedy_calls: int
    surrogate_radius: float
    radius: float
    covered_count: int
    outlier_count: int
    project_seconds: float
    solve_seconds: float
    pullback_seconds: float


def dimred_cen_out(
    points: PointSet,
    ell: int,
    epsilon_internal: float,
    z: int,
    seed: int,
    kind: Optional[SurrogateKind] = None,
    beta: float = 1.0,
) -> tuple[OutlierSolution, OutlierRunTrace]:
    """Binary-search the candidate set for the smallest YES verdict and
    return its centers with the unmarked points as outliers.

    The outlier set is exactly the unmarked points of the winning verdict
    and may hold fewer than z indices.  The reported radius is recomputed
    exactly over non-outliers in the native metric.
    """
    n = points.n
    if n <= ell or ell < 1:
        raise ValueError(f"need n > ell >= 1, got n={n}, ell={ell}")
    if n <= z or z < 0:
        raise ValueError(f"need n > z >= 0, got n={n}, z={z}")
    if not 0.0 < epsilon_internal < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon_internal}")
    if kind is None:
        kind = SurrogateKind.for_metric(points.metric)
    elif kind is not SurrogateKind.for_metric(points.metric):
        raise ValueError(f"surrogate kind {kind} does not match metric {points.metric}")

    t0 = time.perf_counter()
    k = target_dimension(n, epsilon_internal, beta)
    pmap = generate(seed, k, points.dim)
    images = project(points, pmap).images
    t1 = time.perf_counter()

    surrogate = build_surrogate(images, kind)
    candidates = RadiusCandidateSet.from_surrogate(surrogate, epsilon_internal)

    calls = 0

    def decide(idx: int) -> GreedyVerdict:
        nonlocal calls
        calls += 1
        return greedy_cover(surrogate, ell, epsilon_internal, z, float(candidates.values[idx]))

    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if decide(mid).answer:
            hi = mid
        else:
            lo = mid + 1
    verdict = decide(lo)
    # The largest candidate puts every point in one disk, so a YES exists.
    assert verdict.answer, "no YES verdict found; candidate set should be exhaustive"
    t2 = time.perf_counter()

    covered = verdict.covered_mask(n)
    outliers = tuple(np.flatnonzero(~covered).tolist())
    md = min_dists_to(points, verdict.centers)
    radius = float(md[covered].max()) if covered.any() else 0.0
    surrogate_md = surrogate.values[list(verdict.centers)].min(axis=0)
    surrogate_radius = float(surrogate_md[covered].max()) if covered.any() else 0.0
    t3 = time.perf_counter()

    solution = OutlierSolution(
        center_indices=verdict.centers, outlier_indices=outliers, radius=radius
    )
    trace = OutlierRunTrace(
        k=k,
        seed=seed,
        kind=kind,
        epsilon_internal=epsilon_internal,
        candidate_count=len(candidates),
        chosen_candidate=float(candidates.values[lo]),
        greedy_calls=calls,
        surrogate_radius=surrogate_radius,
        radius=radius,
        covered_count=verdict.covered_count,
        outlier_count=len(outliers),
        project_seconds=t1 - t0,
        solve_seconds=t2 - t1,
        pullback_seconds=t3 - t2,
    )
    return solution, trace


def three_plus_eps_out(
    points: PointSet, ell: int, epsilon: float, z: int, seed: int, beta: float = 1.0
) -> OutlierSolution:
    """(3+eps)-approximation (against conservative solutions) for l-center
    with z outliers w.h.p., in either metric (internal distortion eps/8)."""
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must be in (0, 0.5), got {epsilon}")
    solution, _ = dimred_cen_out(points, ell, epsilon / 8.0, z, seed, beta=beta)
    return solution
