"""Random sign-matrix dimension reduction.

Realizes the map f(x) = (1/sqrt(k)) * R @ x for a k x d matrix R with
i.i.d. entries drawn uniformly from {-1, +1} (the Achlioptas binary-coin
variant of Johnson-Lindenstrauss), together with the preimage dictionary
that sends every distinct image vector back to the smallest input index
attaining it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .core import PointSet


class DimensionExpansionWarning(UserWarning):
    """Raised when the target dimension exceeds the input dimension."""


def target_dimension(n: int, epsilon: float, beta: float = 1.0) -> int:
    """Smallest projection dimension guaranteeing the (1 +- epsilon) squared
    distance sandwich for n points with probability at least 1 - n**(-beta).

    Evaluates ceil((4 + 2*beta) / (epsilon**2/2 - epsilon**3/3) * ln(n)),
    clamped below at 1.  Natural logarithm; a larger k only tightens the
    guarantee.
    """
    if n < 2:
        raise ValueError(f"need at least 2 points, got n={n}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    if beta <= 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    k0 = (4.0 + 2.0 * beta) / (epsilon**2 / 2.0 - epsilon**3 / 3.0) * math.log(n)
    return max(1, math.ceil(k0))


@dataclass(frozen=True)
class ProjectionMap:
    """A k x d sign matrix with its 1/sqrt(k) scale and the generating seed."""

    signs: np.ndarray
    k: int
    dim: int
    scale: float
    seed: int

    def apply(self, coords: np.ndarray) -> np.ndarray:
        """Project rows of `coords` (shape (n, d) or (d,)) to dimension k."""
        if coords.shape[-1] != self.dim:
            raise ValueError(
                f"dimension mismatch: map expects d={self.dim}, got {coords.shape[-1]}"
            )
        return coords @ self.signs.T * self.scale


def generate(seed: int, k: int, dim: int) -> ProjectionMap:
    """Draw a k x dim matrix with i.i.d. uniform {-1, +1} entries.

    Deterministic for a fixed seed (PCG64, 128-bit state).  k > dim is
    legal but warns: the "reduction" is then an expansion.
    """
    if k < 1 or dim < 1:
        raise ValueError(f"need k >= 1 and dim >= 1, got k={k}, dim={dim}")
    if k > dim:
        warnings.warn(
            f"target dimension k={k} exceeds input dimension d={dim}",
            DimensionExpansionWarning,
            stacklevel=2,
        )
    rng = np.random.default_rng(seed)
    signs = rng.integers(0, 2, size=(k, dim), dtype=np.int8).astype(np.float64)
    signs *= 2.0
    signs -= 1.0
    signs.flags.writeable = False
    return ProjectionMap(signs=signs, k=k, dim=dim, scale=1.0 / math.sqrt(k), seed=seed)


@dataclass(frozen=True)
class ProjectedSet:
    """Images of a point set under a projection map plus the preimage index.

    `preimage` maps each distinct image vector (keyed by its raw bytes,
    i.e. bit-exact equality) to the smallest input index attaining it;
    `distinct_indices` lists those indices in first-occurrence order.
    """

    images: np.ndarray
    preimage: Mapping[bytes, int] = field(repr=False)
    distinct_indices: tuple[int, ...]

    @property
    def distinct_count(self) -> int:
        return len(self.distinct_indices)

    def preimage_index(self, image: np.ndarray) -> int:
        key = np.ascontiguousarray(image, dtype=np.float64).tobytes()
        try:
            return self.preimage[key]
        except KeyError:
            raise KeyError("image vector is not the image of any input point") from None


def project(points: PointSet, pmap: ProjectionMap) -> ProjectedSet:
    """Compute all images f(p_i) and build the preimage dictionary.

    Hamming inputs are already stored widened to {0.0, 1.0} reals, so the
    same matrix product applies to both metrics.  Duplicate input points
    produce bit-identical images; the preimage keeps the earliest index.
    """
    if points.dim != pmap.dim:
        raise ValueError(
            f"dimension mismatch: points have d={points.dim}, map expects d={pmap.dim}"
        )
    images = pmap.apply(points.coords)
    images.flags.writeable = False
    preimage: dict[bytes, int] = {}
    distinct: list[int] = []
    for i in range(points.n):
        key = images[i].tobytes()
        if key not in preimage:
            preimage[key] = i
            distinct.append(i)
    return ProjectedSet(images=images, preimage=preimage, distinct_indices=tuple(distinct))


def projected_sq_distance(u_img: np.ndarray, v_img: np.ndarray) -> float:
    """Squared l2 distance between two image vectors.

    This is the Hamming-space surrogate distance; take the square root for
    the Euclidean surrogate.
    """
    u_img = np.asarray(u_img, dtype=np.float64)
    v_img = np.asarray(v_img, dtype=np.float64)
    if u_img.shape != v_img.shape:
        raise ValueError(f"dimension mismatch: {u_img.shape} vs {v_img.shape}")
    delta = u_img - v_img
    return float(np.dot(delta, delta))


def sq_distance_rows(images: np.ndarray, i: int) -> np.ndarray:
    """Row of squared l2 distances from image i to every image."""
    delta = images - images[i]
    return np.einsum("ij,ij->i", delta, delta)
