import numpy as np
import pytest
from hypothesis import given, strategies as st

from dimredkc import (
    CenterSolution,
    Metric,
    PointSet,
    distance,
    evaluate_center_solution,
    evaluate_clustering,
)

from helpers import random_points


def test_distance_identity():
    assert distance([1.5, -2.0, 3.0], [1.5, -2.0, 3.0]) == 0.0
    assert distance([0, 1, 0, 1], [0, 1, 0, 1], Metric.HAMMING) == 0.0


def test_distance_examples():
    assert distance([0, 1, 0, 1], [0, 0, 1, 1], Metric.HAMMING) == 2.0
    assert distance([0.0, 0.0], [3.0, 4.0]) == 5.0


def test_distance_errors():
    with pytest.raises(ValueError, match="dimension mismatch"):
        distance([1.0], [1.0, 2.0])
    with pytest.raises(ValueError, match="0, 1"):
        distance([0, 2], [0, 1], Metric.HAMMING)


def test_pointset_validation():
    with pytest.raises(ValueError):
        PointSet(np.empty((0, 3)))
    with pytest.raises(ValueError, match="0, 1"):
        PointSet([[0, 1], [0, 0.5]], Metric.HAMMING)


def test_pointset_immutable():
    p = PointSet([[1.0, 2.0]])
    with pytest.raises(ValueError):
        p.coords[0, 0] = 3.0


def test_evaluate_center_all_points(square):
    assert evaluate_center_solution(square, [0, 1, 2, 3]) == 0.0


def test_evaluate_center_square(square):
    # brute force over the 4x2 point-center table gives max-min 10
    assert evaluate_center_solution(square, [0, 1]) == 10.0


def test_evaluate_center_single_ham_pair():
    p = PointSet([[0, 0, 0, 0], [1, 1, 1, 1]], Metric.HAMMING)
    assert evaluate_center_solution(p, [0]) == 4.0


def test_evaluate_center_errors(square):
    with pytest.raises(ValueError, match="nonempty"):
        evaluate_center_solution(square, [])
    with pytest.raises(ValueError, match="out of range"):
        evaluate_center_solution(square, [4])


def test_evaluate_clustering_singletons(square):
    assert evaluate_clustering(square, [[0], [1], [2], [3]]) == 0.0


def test_evaluate_clustering_pair():
    p = PointSet([[0.0, 0.0], [3.0, 4.0]])
    assert evaluate_clustering(p, [[0, 1]]) == 5.0


def test_evaluate_clustering_ham(ham4):
    # brute-force pairwise max inside {0000,0001} and {1110,1111} is 1
    assert evaluate_clustering(ham4, [[0, 2], [1, 3]]) == 1.0


def test_evaluate_clustering_not_partition(square):
    with pytest.raises(ValueError, match="more than one cluster"):
        evaluate_clustering(square, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError, match="missing"):
        evaluate_clustering(square, [[0, 1], [2]])


@given(st.integers(0, 2**32 - 1), st.sampled_from(list(Metric)))
def test_distance_symmetry(seed, metric):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 12))
    pts = random_points(rng, 2, d, metric)
    p, q = pts.coords
    assert distance(p, q, metric) == distance(q, p, metric)


@given(st.integers(0, 2**32 - 1), st.sampled_from(list(Metric)))
def test_triangle_inequality(seed, metric):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 12))
    pts = random_points(rng, 3, d, metric)
    a, b, c = pts.coords
    rhs = distance(a, b, metric) + distance(b, c, metric)
    slack = 1e-12 * rhs if metric is Metric.EUCLIDEAN else 0.0
    assert distance(a, c, metric) <= rhs + slack


@given(st.integers(0, 2**32 - 1))
def test_hamming_equals_squared_l2(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 64))
    u = rng.integers(0, 2, size=d)
    v = rng.integers(0, 2, size=d)
    ham = distance(u, v, Metric.HAMMING)
    sq = float(((u - v) ** 2).sum())  # exact in floats for 0/1 coordinates
    assert ham == sq
    assert ham == pytest.approx(distance(u, v, Metric.EUCLIDEAN) ** 2, rel=1e-12)


@given(st.integers(0, 2**32 - 1))
def test_center_eval_monotone_under_growth(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 10))
    metric = Metric.HAMMING if seed % 2 else Metric.EUCLIDEAN
    pts = random_points(rng, n, 6, metric)
    order = rng.permutation(n)
    radii = [evaluate_center_solution(pts, order[: i + 1]) for i in range(n)]
    assert all(a >= b for a, b in zip(radii, radii[1:]))


def test_pairwise_matches_dists_from():
    rng = np.random.default_rng(3)
    for metric in Metric:
        pts = random_points(rng, 7, 9, metric)
        full = pts.pairwise()
        assert np.array_equal(full, full.T)
        assert (np.diag(full) == 0).all()
        for i in range(pts.n):
            assert np.array_equal(full[i], pts.dists_from(i))


def test_center_solution_validate(square):
    CenterSolution((0, 1), 10.0).validate(square)
    with pytest.raises(ValueError, match="radius"):
        CenterSolution((0, 1), 9.0).validate(square)
    with pytest.raises(ValueError, match="distinct"):
        CenterSolution((0, 0), 10.0).validate(square)
    with pytest.raises(ValueError, match="assignment"):
        CenterSolution((0, 1), 10.0, assignment=(0, 1, 2, 0)).validate(square)
