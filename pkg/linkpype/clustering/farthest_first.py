"""Farthest-first traversal clustering.

The first center is the point farthest from the coordinate-wise mean of all
points. Every further center is the point whose distance to its nearest chosen
center is largest. Once ``k`` centers are chosen each point joins its nearest
center. All ties go to the lowest index, so the result is fully determined by
the input.

The procedure is the greedy 2-approximation for the k-center problem: its
covering radius is at most twice the optimum. Minimum distances to the chosen
centers are maintained incrementally, so a run on ``n`` points evaluates exactly
``n`` (seed) + ``(k - 1) * n`` (center selection) + ``n * k`` (assignment)
distances when the points hold at least ``k`` distinct values.
"""

import logging
from collections.abc import Sequence

import numpy as np

from linkpype.clustering.distance import DistanceCounter
from linkpype.clustering.model import ClusterModel, FeaturePoint, Metric, as_matrix

_logger: logging.Logger | None = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger(__name__)
    return _logger


def farthest_first(
    points: Sequence[FeaturePoint], k: int, metric: Metric = Metric.EUCLID
) -> ClusterModel:
    """Cluster points by farthest-first traversal.

    Args:
        points (Sequence[FeaturePoint]): Non-empty input points.
        k (int): Number of clusters, at least 1.
        metric (Metric): Distance measure. Defaults to Euclid.

    Returns:
        ClusterModel: ``min(k, distinct points)`` centers (center 0 first
            selected), nearest-center labels and the distance evaluation count.

    Raises:
        ValueError: If ``k`` < 1 or ``points`` is empty.

    Example:
        ```python
        points = [FeaturePoint(i, s, 0) for i, s in enumerate([0, 1, 10, 11])]
        model = farthest_first(points, k=2)
        assert model.centers == ((0.0, 0.0), (11.0, 0.0))
        ```
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not points:
        raise ValueError("farthest_first needs at least one point")

    x = as_matrix(points)
    counter = DistanceCounter(metric)
    chosen = [int(np.argmax(counter.to_point(x, x.mean(axis=0))))]
    nearest = np.full(len(points), np.inf)
    while len(chosen) < k:
        nearest = np.minimum(nearest, counter.to_point(x, x[chosen[-1]]))
        candidate = int(np.argmax(nearest))
        if nearest[candidate] == 0.0:
            break
        chosen.append(candidate)

    assignment = np.argmin(counter.pairwise(x, x[chosen]), axis=1)
    logger().debug(
        f"Farthest-first chose {len(chosen)} centers over {len(points)} points "
        f"with {counter.evals} distance evaluations"
    )
    return ClusterModel(
        k=k,
        centers=tuple((float(x[i, 0]), float(x[i, 1])) for i in chosen),
        labels={
            point.page_id: int(label)
            for point, label in zip(points, assignment, strict=True)
        },
        metric=metric,
        distance_evals=counter.evals,
        center_pages=tuple(points[i].page_id for i in chosen),
    )


def covering_radius(points: Sequence[FeaturePoint], model: ClusterModel) -> float:
    """Largest distance from a point to the center of its own cluster.

    This is the k-center objective of the model over ``points``. It is computed
    outside the model's instrumentation.
    """
    if not points:
        return 0.0
    x = as_matrix(points)
    centers = np.array(model.centers, dtype=np.float64)
    labels = np.array([model.labels[point.page_id] for point in points])
    own = DistanceCounter(model.metric).pairwise(x, centers)[np.arange(len(points)), labels]
    return float(own.max())
