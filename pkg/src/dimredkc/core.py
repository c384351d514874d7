"""Point-set containers, exact distance kernels, and solution records.

All indices are 0-based.  Euclidean coordinates are float64 and radius
comparisons use exact float ordering; Hamming distances are integer-valued
and computed on packed bit words via XOR + popcount.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.spatial.distance import pdist


class Metric(enum.Enum):
    EUCLIDEAN = "euclidean"
    HAMMING = "hamming"


def _pack_words(bits: np.ndarray) -> np.ndarray:
    """Pack an (n, d) 0/1 matrix into (n, W) uint64 words, zero-padded."""
    packed = np.packbits(bits.astype(np.uint8), axis=1)
    pad = (-packed.shape[1]) % 8
    if pad:
        packed = np.pad(packed, [(0, 0), (0, pad)])
    return np.ascontiguousarray(packed).view(np.uint64)


class PointSet:
    """Immutable collection of n points of dimension d with a declared metric.

    Euclidean points are arbitrary reals.  Hamming points must have all
    coordinates in {0, 1}; they are additionally packed into 64-bit words
    so distance kernels run on whole words instead of coordinates.
    """

    __slots__ = ("coords", "metric", "n", "dim", "_words")

    def __init__(self, coords, metric: Metric = Metric.EUCLIDEAN):
        coords = np.array(coords, dtype=np.float64, copy=True, ndmin=2)
        if coords.ndim != 2:
            raise ValueError(f"expected an (n, d) array, got shape {coords.shape}")
        n, d = coords.shape
        if n < 1 or d < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
        if metric is Metric.HAMMING:
            if not np.isin(coords, (0.0, 1.0)).all():
                raise ValueError("Hamming points must have all coordinates in {0, 1}")
            self._words = _pack_words(coords)
            self._words.flags.writeable = False
        else:
            self._words = None
        coords.flags.writeable = False
        self.coords = coords
        self.metric = metric
        self.n = n
        self.dim = d

    def dists_from(self, i: int) -> np.ndarray:
        """Distances from point i to every point, in the native metric."""
        if not 0 <= i < self.n:
            raise IndexError(f"point index {i} out of range [0, {self.n})")
        if self.metric is Metric.HAMMING:
            diff = self._words ^ self._words[i]
            return np.bitwise_count(diff).sum(axis=1, dtype=np.int64).astype(np.float64)
        delta = self.coords - self.coords[i]
        return np.sqrt(np.einsum("ij,ij->i", delta, delta))

    def pairwise(self) -> np.ndarray:
        """Full n x n distance matrix (native metric); symmetric, zero
        diagonal, and row i bit-identical to dists_from(i)."""
        if self.metric is Metric.HAMMING:
            diff = self._words[:, None, :] ^ self._words[None, :, :]
            return np.bitwise_count(diff).sum(axis=2, dtype=np.int64).astype(np.float64)
        return np.stack([self.dists_from(i) for i in range(self.n)])

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(self.coords[list(indices)], self.metric)

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, d={self.dim}, metric={self.metric.value})"


def distance(p, q, metric: Metric = Metric.EUCLIDEAN) -> float:
    """Distance between two points: l2 for Euclidean, count of differing
    coordinates for Hamming.
    """
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise ValueError(f"dimension mismatch: {p.shape} vs {q.shape}")
    if metric is Metric.HAMMING:
        for v in (p, q):
            if not np.isin(v, (0.0, 1.0)).all():
                raise ValueError("Hamming points must have all coordinates in {0, 1}")
        return float(np.count_nonzero(p != q))
    delta = p - q
    return float(np.sqrt(np.dot(delta, delta)))


def _check_indices(indices: Iterable[int], n: int) -> list[int]:
    idx = [int(i) for i in indices]
    for i in idx:
        if not 0 <= i < n:
            raise ValueError(f"index {i} out of range [0, {n})")
    return idx


def min_dists_to(points: PointSet, centers: Sequence[int]) -> np.ndarray:
    """Per-point distance to the nearest of the given centers."""
    idx = _check_indices(centers, points.n)
    if not idx:
        raise ValueError("center set must be nonempty")
    best = points.dists_from(idx[0])
    for t in idx[1:]:
        np.minimum(best, points.dists_from(t), out=best)
    return best


def evaluate_center_solution(points: PointSet, centers: Sequence[int]) -> float:
    """Covering radius of a center set: max over points of the distance to
    the nearest center, in the native metric.
    """
    return float(min_dists_to(points, centers).max())


def _cluster_diameter(points: PointSet, members: Sequence[int]) -> float:
    if len(members) < 2:
        return 0.0
    if points.metric is Metric.HAMMING:
        words = points._words[list(members)]
        diff = words[:, None, :] ^ words[None, :, :]
        return float(np.bitwise_count(diff).sum(axis=2, dtype=np.int64).max())
    return float(pdist(points.coords[list(members)]).max())


def evaluate_clustering(points: PointSet, clusters: Sequence[Sequence[int]]) -> float:
    """Largest intra-cluster pairwise distance of a partition of the points.

    `clusters` must partition [0, n); empty clusters are allowed and
    contribute 0.
    """
    seen = np.zeros(points.n, dtype=bool)
    total = 0
    for c in clusters:
        for i in _check_indices(c, points.n):
            if seen[i]:
                raise ValueError(f"index {i} appears in more than one cluster")
            seen[i] = True
            total += 1
    if total != points.n:
        missing = np.flatnonzero(~seen)
        raise ValueError(f"clusters do not cover all points (missing {missing.tolist()})")
    return max((_cluster_diameter(points, c) for c in clusters), default=0.0)


@dataclass(frozen=True)
class CenterSolution:
    """ell center indices into the input set plus the covering radius."""

    center_indices: tuple[int, ...]
    radius: float
    assignment: Optional[tuple[int, ...]] = None

    def validate(self, points: PointSet) -> None:
        idx = _check_indices(self.center_indices, points.n)
        if len(set(idx)) != len(idx):
            raise ValueError("center indices must be distinct")
        recomputed = evaluate_center_solution(points, idx)
        if points.metric is Metric.HAMMING:
            ok = recomputed == self.radius
        else:
            ok = abs(recomputed - self.radius) <= 1e-12 * max(recomputed, 1.0)
        if not ok:
            raise ValueError(f"radius {self.radius} != recomputed {recomputed}")
        if self.assignment is not None:
            if len(self.assignment) != points.n:
                raise ValueError("assignment length must equal n")
            centers = set(idx)
            if any(a not in centers for a in self.assignment):
                raise ValueError("assignment must map every point to a center index")


@dataclass(frozen=True)
class ClusteringSolution:
    """Partition of [0, n) into ell clusters plus the largest cluster diameter."""

    clusters: tuple[tuple[int, ...], ...]
    max_diameter: float

    def validate(self, points: PointSet) -> None:
        recomputed = evaluate_clustering(points, self.clusters)
        if points.metric is Metric.HAMMING:
            ok = recomputed == self.max_diameter
        else:
            ok = abs(recomputed - self.max_diameter) <= 1e-12 * max(recomputed, 1.0)
        if not ok:
            raise ValueError(f"max_diameter {self.max_diameter} != recomputed {recomputed}")


@dataclass(frozen=True)
class OutlierSolution:
    """ell centers, at most z discarded points, covering radius over the rest."""

    center_indices: tuple[int, ...]
    outlier_indices: tuple[int, ...]
    radius: float

    def validate(self, points: PointSet, z: int) -> None:
        centers = _check_indices(self.center_indices, points.n)
        outliers = _check_indices(self.outlier_indices, points.n)
        if len(set(centers)) != len(centers):
            raise ValueError("center indices must be distinct")
        if len(outliers) > z:
            raise ValueError(f"{len(outliers)} outliers exceed budget z={z}")
        if set(centers) & set(outliers):
            raise ValueError("centers and outliers must be disjoint")
        md = min_dists_to(points, centers)
        keep = np.ones(points.n, dtype=bool)
        keep[outliers] = False
        recomputed = float(md[keep].max()) if keep.any() else 0.0
        if points.metric is Metric.HAMMING:
            ok = recomputed == self.radius
        else:
            ok = abs(recomputed - self.radius) <= 1e-12 * max(recomputed, 1.0)
        if not ok:
            raise ValueError(f"radius {self.radius} != recomputed {recomputed}")
