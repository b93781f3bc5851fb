"""Lloyd k-means, kept as the comparison baseline for farthest-first.

Initial centers are distinct data points drawn with a seeded generator. Each
iteration moves every center to the mean of its cluster (a center whose cluster
is empty stays where it is) and re-assigns points to their nearest center. The
loop stops at a label fixpoint or after ``max_iter`` iterations. A run with
``t`` iterations performs ``t + 1`` assignment rounds of ``n * k`` distance
evaluations each.
"""

import logging
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from linkpype.clustering.distance import DistanceCounter
from linkpype.clustering.model import ClusterModel, FeaturePoint, Metric, as_matrix


class KMeans:
    """Seeded Lloyd iteration over feature points.

    Attributes:
        k (int): Number of clusters.
        metric (Metric): Distance used for assignment. Centers are always
            updated to cluster means.
        max_iter (int): Upper bound on iterations.
        min_iter (int): Iterations performed even after a label fixpoint, used to
            force a fixed amount of work in benchmarks.
        rng_seed (int): Seed for the initial centers.
        inertia_history (list[float]): Euclid inertia after every assignment round.
    """

    _logger: logging.Logger | None = None

    @classmethod
    def logger(cls) -> logging.Logger:
        if cls._logger is None:
            cls._logger = logging.getLogger(__name__)
        return cls._logger

    def __init__(
        self,
        k: int,
        metric: Metric = Metric.EUCLID,
        max_iter: int = 100,
        rng_seed: int = 0,
        min_iter: int = 0,
    ):
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        if max_iter < 0 or min_iter < 0:
            raise ValueError("Iteration bounds must be non-negative")
        self.k = k
        self.metric = metric
        self.max_iter = max_iter
        self.min_iter = min(min_iter, max_iter)
        self.rng_seed = rng_seed
        self.inertia_history: list[float] = []

    def _initial_centers(self, x: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        _, first_index = np.unique(x, axis=0, return_index=True)
        distinct = np.sort(first_index)
        rng = np.random.default_rng(self.rng_seed)
        picked = rng.choice(distinct, size=min(self.k, len(distinct)), replace=False)
        return x[picked].copy()

    def fit(self, points: Sequence[FeaturePoint]) -> ClusterModel:
        """Run Lloyd iteration on ``points``.

        Raises:
            ValueError: If ``points`` is empty.
        """
        if not points:
            raise ValueError("kmeans_baseline needs at least one point")
        x = as_matrix(points)
        counter = DistanceCounter(self.metric)
        centers = self._initial_centers(x)
        labels = np.argmin(counter.pairwise(x, centers), axis=1)
        self.inertia_history = [inertia(x, centers, labels)]

        t = 0
        while t < self.max_iter:
            for cluster in range(len(centers)):
                members = x[labels == cluster]
                if len(members):
                    centers[cluster] = members.mean(axis=0)
            t += 1
            updated = np.argmin(counter.pairwise(x, centers), axis=1)
            converged = bool(np.array_equal(updated, labels))
            labels = updated
            self.inertia_history.append(inertia(x, centers, labels))
            self.logger().debug(f"k-means iteration {t}: inertia {self.inertia_history[-1]:.4f}")
            if converged and t >= self.min_iter:
                break

        return ClusterModel(
            k=self.k,
            centers=tuple((float(s), float(c)) for s, c in centers),
            labels={
                point.page_id: int(label)
                for point, label in zip(points, labels, strict=True)
            },
            metric=self.metric,
            distance_evals=counter.evals,
            iterations=t,
        )


def inertia(
    x: npt.NDArray[np.float64],
    centers: npt.NDArray[np.float64],
    labels: npt.NDArray[np.intp],
) -> float:
    """Sum of squared Euclid distances from every point to its own center."""
    return float(((x - centers[labels]) ** 2).sum())


def kmeans_baseline(
    points: Sequence[FeaturePoint],
    k: int,
    metric: Metric = Metric.EUCLID,
    max_iter: int = 100,
    rng_seed: int = 0,
    min_iter: int = 0,
) -> ClusterModel:
    """Cluster points with seeded Lloyd k-means.

    Args:
        points (Sequence[FeaturePoint]): Non-empty input points.
        k (int): Number of clusters, at least 1.
        metric (Metric): Assignment distance. Defaults to Euclid.
        max_iter (int): Iteration bound; 0 keeps the labels of the initial
            centers. Defaults to 100.
        rng_seed (int): Seed of the initial centers. Defaults to 0.
        min_iter (int): Iterations to run even past a fixpoint. Defaults to 0.

    Returns:
        ClusterModel: Centers, labels, iteration count ``t`` and
            ``n * k * (t + 1)`` distance evaluations.

    Raises:
        ValueError: If ``k`` < 1 or ``points`` is empty.
    """
    return KMeans(
        k=k, metric=metric, max_iter=max_iter, rng_seed=rng_seed, min_iter=min_iter
    ).fit(points)
