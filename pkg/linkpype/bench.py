"""Farthest-first versus k-means benchmark.

Both algorithms cluster the same seeded random points. The benchmark reports
wall times, the instrumented distance evaluation counts and how far the two
labelings agree. On ``n`` points with ``k`` clusters farthest-first evaluates
``2 * n * k`` distances, while k-means with ``t`` iterations evaluates
``n * k * (t + 1)``.
"""

import dataclasses
import logging
import time
from collections.abc import Callable, Mapping
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from linkpype.clustering.farthest_first import farthest_first
from linkpype.clustering.kmeans import kmeans_baseline
from linkpype.clustering.model import ClusterModel, FeaturePoint, Metric

# Coordinates of benchmark points lie in [0, POINT_SCALE).
POINT_SCALE = 1000.0


@dataclass(frozen=True)
class BenchResult:
    """Outcome of one benchmark run.

    Attributes:
        n (int): Number of points.
        k (int): Number of clusters.
        ff_wall_seconds (float): Best farthest-first wall time.
        km_wall_seconds (float): Best k-means wall time.
        km_iterations (int): Lloyd iterations ``t`` of the k-means run.
        ff_distance_evals (int): Distances evaluated by farthest-first.
        km_distance_evals (int): Distances evaluated by k-means.
        labels_agreement (float): Share of points whose clusters correspond under
            the best one-to-one matching of cluster labels.
    """

    n: int
    k: int
    ff_wall_seconds: float
    km_wall_seconds: float
    km_iterations: int
    ff_distance_evals: int
    km_distance_evals: int
    labels_agreement: float

    def items(self) -> list[tuple[str, object]]:
        return list(dataclasses.asdict(self).items())


def random_points(n: int, rng_seed: int) -> list[FeaturePoint]:
    """``n`` seeded points drawn uniformly from ``[0, POINT_SCALE)^2``."""
    rng = np.random.default_rng(rng_seed)
    coordinates = rng.uniform(0.0, POINT_SCALE, size=(n, 2))
    return [FeaturePoint(page, float(s), float(c)) for page, (s, c) in enumerate(coordinates)]


def labels_agreement(a: Mapping[int, int], b: Mapping[int, int]) -> float:
    """Share of points co-clustered identically under the best label matching.

    Args:
        a (Mapping[int, int]): Cluster label per point.
        b (Mapping[int, int]): Cluster label per point, same keys as ``a``.

    Returns:
        float: Matched points over all points, 1.0 for empty labelings.
    """
    if not a:
        return 1.0
    points = sorted(a)
    rows = np.array([a[p] for p in points])
    cols = np.array([b[p] for p in points])
    contingency = np.zeros((rows.max() + 1, cols.max() + 1), dtype=np.int64)
    np.add.at(contingency, (rows, cols), 1)
    matched_rows, matched_cols = linear_sum_assignment(contingency, maximize=True)
    return float(contingency[matched_rows, matched_cols].sum()) / len(points)


class ClusteringBenchmark:
    """Times the two clustering algorithms on identical data.

    Attributes:
        repeats (int): Timed runs per algorithm; the fastest is reported.
    """

    _logger: logging.Logger | None = None

    @classmethod
    def logger(cls) -> logging.Logger:
        if cls._logger is None:
            cls._logger = logging.getLogger(__name__)
        return cls._logger

    def __init__(self, repeats: int = 3):
        if repeats < 1:
            raise ValueError(f"repeats must be at least 1, got {repeats}")
        self.repeats = repeats

    def compare(self, n: int, k: int, t_min: int = 3, rng_seed: int = 0) -> BenchResult:
        """Run both algorithms on ``n`` random points.

        K-means runs at least ``t_min`` iterations and at most
        ``max(t_min, 100)``.

        Raises:
            ValueError: If ``n < k``, ``k < 1`` or ``t_min`` is negative.
        """
        if k < 1 or n < k:
            raise ValueError(f"Need n >= k >= 1, got n={n}, k={k}")
        if t_min < 0:
            raise ValueError(f"t_min must be non-negative, got {t_min}")
        points = random_points(n, rng_seed)

        ff_seconds, ff = self._timed(lambda: farthest_first(points, k, Metric.EUCLID))
        km_seconds, km = self._timed(
            lambda: kmeans_baseline(
                points,
                k,
                Metric.EUCLID,
                max_iter=max(t_min, 100),
                rng_seed=rng_seed,
                min_iter=t_min,
            )
        )
        result = BenchResult(
            n=n,
            k=k,
            ff_wall_seconds=ff_seconds,
            km_wall_seconds=km_seconds,
            km_iterations=km.iterations,
            ff_distance_evals=ff.distance_evals,
            km_distance_evals=km.distance_evals,
            labels_agreement=labels_agreement(ff.labels, km.labels),
        )
        self.logger().info(
            f"n={n} k={k}: farthest-first {ff_seconds:.4f}s / {ff.distance_evals} evals, "
            f"k-means {km_seconds:.4f}s / {km.distance_evals} evals in {km.iterations} iterations"
        )
        return result

    def _timed(self, run: Callable[[], ClusterModel]) -> tuple[float, ClusterModel]:
        best = float("inf")
        model: ClusterModel | None = None
        for _ in range(self.repeats):
            start = self._current_seconds_counter()
            model = run()
            best = min(best, self._current_seconds_counter() - start)
        assert model is not None
        return best, model

    def _current_seconds_counter(self) -> float:
        return time.perf_counter()


def bench_compare(
    n: int, k: int, t_min: int = 3, rng_seed: int = 0, repeats: int = 3
) -> BenchResult:
    """Compare farthest-first and k-means on ``n`` seeded random points.

    Example:
        ```python
        bench_compare(4, 2).ff_distance_evals  # 16
        ```
    """
    return ClusteringBenchmark(repeats=repeats).compare(n, k, t_min, rng_seed)
