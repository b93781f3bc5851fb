"""Interquartile-range outlier flagging.

Quartiles use linear interpolation between order statistics at positions
``0.25 * (n - 1)`` and ``0.75 * (n - 1)`` of the sorted values. With
``IQR = Q3 - Q1``, a value beyond ``extreme_factor * IQR`` from the quartiles is
extreme, a value beyond ``outlier_factor * IQR`` is an outlier, and everything
else is normal.
"""

from collections.abc import Sequence
from enum import Enum

import numpy as np


class OutlierFlag(Enum):
    NORMAL = "normal"
    OUTLIER = "outlier"
    EXTREME = "extreme"

    def __str__(self) -> str:
        return self.value


def quartiles(values: Sequence[float]) -> tuple[float, float]:
    """Return ``(Q1, Q3)`` by linear interpolation."""
    q1, q3 = np.percentile(np.asarray(values, dtype=np.float64), [25, 75], method="linear")
    return float(q1), float(q3)


def iqr_outliers(
    values: Sequence[float],
    outlier_factor: float = 1.5,
    extreme_factor: float = 3.0,
) -> list[OutlierFlag]:
    """Flag every value as normal, outlier or extreme.

    Args:
        values (Sequence[float]): Non-empty values.
        outlier_factor (float): Fence multiplier for outliers. Defaults to 1.5.
        extreme_factor (float): Fence multiplier for extremes, at least
            ``outlier_factor``. Defaults to 3.0.

    Returns:
        list[OutlierFlag]: One flag per value, in input order.

    Raises:
        ValueError: If ``values`` is empty or the factors are out of order.

    Example:
        ```python
        iqr_outliers([1, 2, 3, 4, 100])[-1]  # OutlierFlag.EXTREME
        ```
    """
    if len(values) == 0:
        raise ValueError("iqr_outliers needs at least one value")
    if not 0 < outlier_factor <= extreme_factor:
        raise ValueError(
            f"Need 0 < outlier_factor <= extreme_factor, got {outlier_factor}, {extreme_factor}"
        )
    q1, q3 = quartiles(values)
    iqr = q3 - q1
    flags = []
    for value in values:
        if value > q3 + extreme_factor * iqr or value < q1 - extreme_factor * iqr:
            flags.append(OutlierFlag.EXTREME)
        elif value > q3 + outlier_factor * iqr or value < q1 - outlier_factor * iqr:
            flags.append(OutlierFlag.OUTLIER)
        else:
            flags.append(OutlierFlag.NORMAL)
    return flags
