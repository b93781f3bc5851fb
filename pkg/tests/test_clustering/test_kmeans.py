"""Tests for the k-means baseline."""

import numpy as np
import pytest

from linkpype.clustering.kmeans import KMeans, kmeans_baseline
from linkpype.clustering.model import FeaturePoint, Metric


def _points(coordinates: list[tuple[float, float]]) -> list[FeaturePoint]:
    return [FeaturePoint(page, s, c) for page, (s, c) in enumerate(coordinates)]


SEPARATED = _points([(0, 0), (1, 0), (100, 0), (101, 0)])


@pytest.mark.parametrize("seed", range(10))
def test_separated_pairs(seed: int) -> None:
    """Test that well-separated pairs end up in separate clusters for any seed."""
    labels = kmeans_baseline(SEPARATED, k=2, rng_seed=seed).labels
    assert labels[0] == labels[1]
    assert labels[2] == labels[3]
    assert labels[0] != labels[2]


def test_single_cluster_center_is_mean() -> None:
    """Test that k=1 converges to the coordinate-wise mean."""
    model = kmeans_baseline(SEPARATED, k=1)
    assert model.centers[0] == pytest.approx((50.5, 0.0))
    assert set(model.labels.values()) == {0}


def test_zero_iterations() -> None:
    """Test that max_iter=0 keeps the labels of the initial centers."""
    model = kmeans_baseline(SEPARATED, k=2, max_iter=0, rng_seed=3)
    assert model.iterations == 0
    assert model.distance_evals == 4 * 2
    assert set(model.centers) <= {(0.0, 0.0), (1.0, 0.0), (100.0, 0.0), (101.0, 0.0)}


def test_distance_budget() -> None:
    """Test the n * k * (t + 1) distance evaluation count."""
    rng = np.random.default_rng(1)
    points = _points([(float(s), float(c)) for s, c in rng.uniform(0, 100, size=(300, 2))])
    model = kmeans_baseline(points, k=5, rng_seed=1)
    assert model.iterations >= 1
    assert model.distance_evals == 300 * 5 * (model.iterations + 1)


def test_min_iter_forces_work() -> None:
    """Test that min_iter keeps iterating past a label fixpoint."""
    model = kmeans_baseline(SEPARATED, k=2, rng_seed=0, min_iter=7)
    assert model.iterations == 7
    assert model.distance_evals == 4 * 2 * 8


def test_inertia_non_increasing() -> None:
    """Test that inertia never grows across iterations."""
    rng = np.random.default_rng(2)
    points = _points([(float(s), float(c)) for s, c in rng.uniform(0, 100, size=(200, 2))])
    kmeans = KMeans(k=4, rng_seed=2)
    model = kmeans.fit(points)
    history = kmeans.inertia_history
    assert len(history) == model.iterations + 1
    assert all(later <= earlier + 1e-9 for earlier, later in zip(history, history[1:]))


def test_deterministic_per_seed() -> None:
    """Test that a seed fixes the result."""
    rng = np.random.default_rng(3)
    points = _points([(float(s), float(c)) for s, c in rng.uniform(0, 100, size=(50, 2))])
    assert kmeans_baseline(points, 3, rng_seed=9) == kmeans_baseline(points, 3, rng_seed=9)


def test_manhattan_assignment() -> None:
    """Test clustering with the Manhattan metric."""
    model = kmeans_baseline(SEPARATED, k=2, metric=Metric.MANHATTAN)
    assert model.metric is Metric.MANHATTAN
    assert model.labels[0] != model.labels[3]


def test_argument_errors() -> None:
    """Test that invalid arguments are rejected."""
    with pytest.raises(ValueError):
        kmeans_baseline(SEPARATED, k=0)
    with pytest.raises(ValueError):
        kmeans_baseline([], k=1)
    with pytest.raises(ValueError):
        KMeans(k=2, max_iter=-1)
