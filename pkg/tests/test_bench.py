"""Tests for the farthest-first versus k-means benchmark."""

from unittest.mock import patch

import pytest

from linkpype.bench import (
    POINT_SCALE,
    BenchResult,
    ClusteringBenchmark,
    bench_compare,
    labels_agreement,
    random_points,
)


def test_logger() -> None:
    """Test logger creation and caching."""
    ClusteringBenchmark._logger = None
    logger = ClusteringBenchmark.logger()
    assert logger is not None
    assert ClusteringBenchmark.logger() is logger


def test_random_points() -> None:
    """Test that benchmark points are seeded and inside the square."""
    points = random_points(50, rng_seed=4)
    assert points == random_points(50, rng_seed=4)
    assert [p.page_id for p in points] == list(range(50))
    assert all(0 <= p.s < POINT_SCALE and 0 <= p.c < POINT_SCALE for p in points)


def test_smallest_case() -> None:
    """Test that four points in two clusters take 16 farthest-first distances."""
    assert bench_compare(4, 2, repeats=1).ff_distance_evals == 16


@pytest.mark.parametrize("n", [100, 1000, 6000])
def test_distance_counts(n: int) -> None:
    """Test the exact evaluation counts of both algorithms."""
    result = bench_compare(n, 5, t_min=3, repeats=1)
    assert result.km_iterations >= 3
    assert result.ff_distance_evals == 2 * n * 5
    assert result.km_distance_evals == n * 5 * (result.km_iterations + 1)


def test_farthest_first_is_faster() -> None:
    """Test that farthest-first beats k-means at n=6000, k=5, t >= 3."""
    result = bench_compare(6000, 5, t_min=3, repeats=3)
    assert result.ff_wall_seconds < result.km_wall_seconds


def test_one_cluster_per_point() -> None:
    """Test that k = n makes both labelings agree completely."""
    assert bench_compare(20, 20, t_min=0, repeats=1).labels_agreement == 1.0


def test_timed_keeps_best_run() -> None:
    """Test that the fastest of the repeated runs is reported."""
    benchmark = ClusteringBenchmark(repeats=3)
    clock = iter([10.0, 12.0, 20.0, 20.5, 30.0, 31.0])
    with patch.object(ClusteringBenchmark, "_current_seconds_counter", side_effect=lambda: next(clock)):
        seconds, model = benchmark._timed(lambda: "model")
    assert seconds == 0.5
    assert model == "model"


@pytest.mark.parametrize("n, k, t_min", [(3, 4, 3), (5, 0, 3), (5, 2, -1)])
def test_invalid_arguments(n: int, k: int, t_min: int) -> None:
    """Test that impossible benchmark sizes are rejected."""
    with pytest.raises(ValueError):
        bench_compare(n, k, t_min=t_min)


def test_invalid_repeats() -> None:
    """Test that at least one timed run is required."""
    with pytest.raises(ValueError):
        ClusteringBenchmark(repeats=0)


def test_labels_agreement() -> None:
    """Test agreement under relabeling and partial overlap."""
    assert labels_agreement({0: 0, 1: 0, 2: 1}, {0: 1, 1: 1, 2: 0}) == 1.0
    assert labels_agreement({0: 0, 1: 0, 2: 1, 3: 1}, {0: 0, 1: 1, 2: 1, 3: 1}) == 0.75
    assert labels_agreement({}, {}) == 1.0


def test_result_items() -> None:
    """Test the key=value rendering order of a result."""
    result = BenchResult(4, 2, 0.1, 0.2, 3, 16, 32, 1.0)
    assert [key for key, _ in result.items()] == [
        "n", "k", "ff_wall_seconds", "km_wall_seconds", "km_iterations",
        "ff_distance_evals", "km_distance_evals", "labels_agreement",
    ]  # fmt: skip
