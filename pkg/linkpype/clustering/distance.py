"""Distance measures with evaluation counting.

The Euclid distance between two pages is
``sqrt((S_a - S_b)**2 + (C_a - C_b)**2)`` and the Manhattan distance is
``|S_a - S_b| + |C_a - C_b|``. Clustering code computes distances in vectorized
blocks through ``DistanceCounter``, which counts every point-to-point distance it
produces so that the operation counts of different algorithms can be compared
exactly.
"""

import math

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import cdist

from linkpype.clustering.model import FeaturePoint, Metric

_SCIPY_METRIC = {Metric.EUCLID: "euclidean", Metric.MANHATTAN: "cityblock"}


def distance(a: FeaturePoint, b: FeaturePoint, metric: Metric = Metric.EUCLID) -> float:
    """Distance between two feature points.

    Example:
        ```python
        distance(FeaturePoint(0, 3, 4), FeaturePoint(1, 0, 0))  # 5.0
        ```
    """
    ds, dc = a.s - b.s, a.c - b.c
    if metric is Metric.MANHATTAN:
        return abs(ds) + abs(dc)
    return math.hypot(ds, dc)


class DistanceCounter:
    """Vectorized distance computation that counts evaluations.

    Attributes:
        metric (Metric): Distance measure.
        evals (int): Point-to-point distances computed so far.
    """

    def __init__(self, metric: Metric = Metric.EUCLID):
        self.metric = metric
        self.evals = 0

    def pairwise(
        self, xa: npt.NDArray[np.float64], xb: npt.NDArray[np.float64]
    ) -> npt.NDArray[np.float64]:
        """Distances between every row of ``xa`` and every row of ``xb``.

        Args:
            xa (numpy.ndarray): ``m x 2`` matrix.
            xb (numpy.ndarray): ``p x 2`` matrix.

        Returns:
            numpy.ndarray: ``m x p`` distance matrix. Adds ``m * p`` to ``evals``.
        """
        xa = np.atleast_2d(xa)
        xb = np.atleast_2d(xb)
        self.evals += xa.shape[0] * xb.shape[0]
        return cdist(xa, xb, metric=_SCIPY_METRIC[self.metric])

    def to_point(
        self, x: npt.NDArray[np.float64], point: npt.NDArray[np.float64]
    ) -> npt.NDArray[np.float64]:
        """Distances from every row of ``x`` to a single point."""
        return self.pairwise(x, point.reshape(1, -1))[:, 0]
