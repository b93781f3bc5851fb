"""Clustering data types.

Classes:
    Metric: Distance measure used by a clustering run.
    FeaturePoint: One page's ``(S, C)`` feature vector.
    ClusterModel: Result of a clustering run.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt


class Metric(Enum):
    EUCLID = "euclid"
    MANHATTAN = "manhattan"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FeaturePoint:
    """One page's feature vector.

    Attributes:
        page_id (int): Page index.
        s (float): Average dwell seconds, non-negative.
        c (float): Click count, non-negative.
    """

    page_id: int
    s: float
    c: float

    def __post_init__(self) -> None:
        if self.s < 0 or self.c < 0:
            raise ValueError(f"Features must be non-negative, got ({self.s}, {self.c})")


def as_matrix(points: Sequence[FeaturePoint]) -> npt.NDArray[np.float64]:
    """Stack points into an ``n x 2`` float matrix of ``(s, c)`` rows."""
    return np.array([(point.s, point.c) for point in points], dtype=np.float64).reshape(
        len(points), 2
    )


@dataclass(frozen=True)
class ClusterModel:
    """Result of a clustering run.

    Attributes:
        k (int): Requested number of clusters.
        centers (tuple[tuple[float, float], ...]): Center coordinates, center 0
            first selected. Their count is ``min(k, distinct points)``.
        labels (Mapping[int, int]): Cluster index of every clustered page id.
        metric (Metric): Distance measure used.
        distance_evals (int): Number of point-to-point distances evaluated.
        iterations (int): Lloyd iterations ``t`` (0 for farthest-first).
        center_pages (tuple[int, ...]): Page id of each center when centers are
            data points (farthest-first), empty otherwise.
    """

    k: int
    centers: tuple[tuple[float, float], ...]
    labels: Mapping[int, int]
    metric: Metric = Metric.EUCLID
    distance_evals: int = 0
    iterations: int = 0
    center_pages: tuple[int, ...] = field(default=())

    @classmethod
    def empty(cls, k: int, metric: Metric = Metric.EUCLID) -> "ClusterModel":
        """A model with no clustered pages."""
        return cls(k=k, centers=(), labels={}, metric=metric)

    def cluster_ranks(self) -> dict[int, int]:
        """Rank clusters by descending center ``S`` (ties: lower cluster index).

        Returns:
            dict[int, int]: Rank of every cluster index, 0 for the best cluster.
        """
        order = sorted(range(len(self.centers)), key=lambda index: (-self.centers[index][0], index))
        return {cluster: rank for rank, cluster in enumerate(order)}

    def rank_of(self, page_id: int) -> int | None:
        """Rank of the cluster holding ``page_id``, or None if it was not clustered."""
        cluster = self.labels.get(page_id)
        if cluster is None:
            return None
        return self.cluster_ranks()[cluster]

    def members(self, cluster: int) -> list[int]:
        return sorted(page for page, label in self.labels.items() if label == cluster)


def min_max_normalize(points: Sequence[FeaturePoint]) -> list[FeaturePoint]:
    """Rescale ``s`` and ``c`` independently to ``[0, 1]``.

    A feature with zero spread maps to 0 for every point.
    """
    if not points:
        return []
    x = as_matrix(points)
    low = x.min(axis=0)
    spread = x.max(axis=0) - low
    scaled = np.divide(x - low, spread, out=np.zeros_like(x), where=spread > 0)
    return [
        FeaturePoint(point.page_id, float(s), float(c))
        for point, (s, c) in zip(points, scaled, strict=True)
    ]
