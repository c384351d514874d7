"""Shared instance builders and sandwich checks for the test suite."""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import pdist

from dimredkc import Metric, PointSet
from dimredkc.outliers import SurrogateKind, SurrogateMatrix, build_surrogate


def random_points(rng: np.random.Generator, n: int, d: int, metric: Metric) -> PointSet:
    if metric is Metric.HAMMING:
        return PointSet(rng.integers(0, 2, size=(n, d)), Metric.HAMMING)
    return PointSet(rng.normal(size=(n, d)), Metric.EUCLIDEAN)


def sandwich_violations_euclid(points: PointSet, images: np.ndarray, eps: float):
    """Pairs whose image distance leaves [(1-eps)*d, (1+eps)*d].

    Returns (violations, pairs, all_ok) over the n*(n-1)/2 unordered pairs.
    """
    exact = pdist(points.coords)
    proj = pdist(images)
    bad = (proj < (1.0 - eps) * exact) | (proj > (1.0 + eps) * exact)
    return int(bad.sum()), len(exact), not bad.any()


def sandwich_violations_ham(points: PointSet, images: np.ndarray, eps: float):
    """Pairs whose squared image distance leaves [(1-eps)*ham, (1+eps)*ham]."""
    exact = pdist(points.coords, metric="sqeuclidean")  # equals ham on binary points
    proj = pdist(images, metric="sqeuclidean")
    bad = (proj < (1.0 - eps) * exact) | (proj > (1.0 + eps) * exact)
    return int(bad.sum()), len(exact), not bad.any()


def planted_cover_instance(ell: int, members: int, strays: int, squared: bool):
    """Clusters of known surrogate radius plus far strays.

    Cluster j sits at base 10**6 * (j + 1) on the line, its base point first,
    then `members` points at offsets in [0.9, 1.0] (so every member row ties
    the base row's candidate-disk size and the base wins by index); strays
    sit at -10**6 * (i + 1).  Returns (surrogate, r_plant) where r_plant is
    the exact largest base-to-member surrogate value, itself an entry of the
    matrix.
    """
    assert members >= 1 and ell >= 1
    coords = []
    for j in range(ell):
        base = 1e6 * (j + 1)
        coords.append(base)
        for m in range(members):
            coords.append(base + 0.9 + 0.1 * (m + 1) / members)
    for i in range(strays):
        coords.append(-1e6 * (i + 1))
    images = np.array(coords)[:, None]
    kind = SurrogateKind.HAMMING if squared else SurrogateKind.EUCLIDEAN
    surrogate = build_surrogate(images, kind)
    r_plant = 0.0
    stride = members + 1
    for j in range(ell):
        base_idx = j * stride
        block = surrogate.values[base_idx, base_idx + 1 : base_idx + stride]
        r_plant = max(r_plant, float(block.max()))
    return surrogate, r_plant


def random_surrogate(rng: np.random.Generator, n: int, kind: SurrogateKind) -> SurrogateMatrix:
    images = rng.normal(size=(n, int(rng.integers(2, 6))))
    return build_surrogate(images, kind)
