"""Pipeline configuration.

A configuration file is a flat list of ``key = value`` lines. Blank lines and
lines starting with ``#`` are ignored; keys are the field names of
``PipelineConfig`` and unknown keys are rejected, so a misspelled threshold name
fails loudly instead of silently falling back to its default.

Example:
    ```text
    # thresholds
    alpha_seconds = 10
    beta_clicks = 2
    k_clusters = 3
    metric = manhattan
    lower_bound_support = 0.2
    min_confidence = 2/3
    ```
"""

import dataclasses
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from linkpype.clustering.model import Metric
from linkpype.errors import ConfigError
from linkpype.mining.itemset import MiningParams
from linkpype.preprocess.session import UserIdMode
from linkpype.preprocess.sessionizer import DEFAULT_SESSION_TIMEOUT
from linkpype.reorganizer.planner import DEFAULT_OUTDEG_THRESHOLD

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ValueError(f"not a boolean: {text!r}")


@dataclass(frozen=True)
class PipelineConfig:
    """Thresholds and switches of one pipeline run.

    Attributes:
        alpha_seconds (float): Session threshold; pages with mean dwell below it
            are not clustered.
        beta_clicks (int): Click threshold; pages with fewer visits are not
            clustered.
        session_timeout_seconds (int): Inactivity gap that starts a new session.
        k_clusters (int): Number of farthest-first clusters.
        metric (Metric): Clustering distance.
        rank_limit (int): Top-ranked clusters whose pages may receive links.
        upper_bound_support (Fraction): First support threshold of the schedule.
        lower_bound_support (Fraction): Last support threshold of the schedule.
        delta (Fraction): Support decrement.
        min_confidence (Fraction): Rule confidence threshold.
        required_itemsets (int): Frequent itemsets that stop the schedule.
        outdeg_threshold (int): Out-degree cap of the reorganized pages.
        outlier_factor (float): Inner IQR fence multiplier.
        extreme_factor (float): Outer IQR fence multiplier.
        drop_extremes (bool): Remove extreme pages before clustering.
        user_id_mode (UserIdMode): How records are attributed to users.
        rng_seed (int): Seed of every randomized step.
        normalize (bool): Min-max normalize features before clustering.
        kmeans_max_iter (int): Iteration bound of the k-means baseline.
        compare_kmeans (bool): Also cluster with the seeded k-means baseline and
            report its distance evaluations and label agreement.
    """

    alpha_seconds: float = 0.0
    beta_clicks: int = 1
    session_timeout_seconds: int = DEFAULT_SESSION_TIMEOUT
    k_clusters: int = 3
    metric: Metric = Metric.EUCLID
    rank_limit: int = 1
    upper_bound_support: Fraction = Fraction(1)
    lower_bound_support: Fraction = Fraction(1, 10)
    delta: Fraction = Fraction(1, 20)
    min_confidence: Fraction = Fraction(9, 10)
    required_itemsets: int = 10
    outdeg_threshold: int = DEFAULT_OUTDEG_THRESHOLD
    outlier_factor: float = 1.5
    extreme_factor: float = 3.0
    drop_extremes: bool = True
    user_id_mode: UserIdMode = UserIdMode.IP_AND_AGENT
    rng_seed: int = 0
    normalize: bool = False
    kmeans_max_iter: int = 100
    compare_kmeans: bool = False

    def __post_init__(self) -> None:
        checks = [
            (self.alpha_seconds >= 0, "alpha_seconds must be non-negative"),
            (self.beta_clicks >= 0, "beta_clicks must be non-negative"),
            (self.session_timeout_seconds >= 0, "session_timeout_seconds must be non-negative"),
            (self.k_clusters >= 1, "k_clusters must be at least 1"),
            (self.rank_limit >= 1, "rank_limit must be at least 1"),
            (self.outdeg_threshold >= 0, "outdeg_threshold must be non-negative"),
            (
                0 < self.outlier_factor <= self.extreme_factor,
                "need 0 < outlier_factor <= extreme_factor",
            ),
            (self.kmeans_max_iter >= 0, "kmeans_max_iter must be non-negative"),
        ]
        for ok, message in checks:
            if not ok:
                raise ConfigError(message)
        try:
            self.mining_params()
        except ValueError as e:
            raise ConfigError(str(e)) from e

    def mining_params(self) -> MiningParams:
        return MiningParams(
            upper_bound_support=self.upper_bound_support,
            lower_bound_support=self.lower_bound_support,
            delta=self.delta,
            min_confidence=self.min_confidence,
            required_itemsets=self.required_itemsets,
        )

    def with_overrides(self, **overrides: Any) -> "PipelineConfig":
        """Return a copy with the given fields replaced; None values are ignored.

        Raises:
            ConfigError: If a key is not a configuration field or a value is
                invalid.
        """
        known = {f.name for f in dataclasses.fields(self)}
        updates = {key: value for key, value in overrides.items() if value is not None}
        unknown = sorted(set(updates) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(unknown)}")
        return dataclasses.replace(self, **updates)

    def items(self) -> list[tuple[str, str]]:
        """Field names with their values rendered the way ``load_config`` reads them."""
        rendered = []
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Metric | UserIdMode):
                text = value.value
            elif isinstance(value, bool):
                text = str(value).lower()
            else:
                text = str(value)
            rendered.append((f.name, text))
        return rendered


_PARSERS: dict[str, Callable[[str], Any]] = {
    "alpha_seconds": float,
    "beta_clicks": int,
    "session_timeout_seconds": int,
    "k_clusters": int,
    "metric": Metric,
    "rank_limit": int,
    "upper_bound_support": Fraction,
    "lower_bound_support": Fraction,
    "delta": Fraction,
    "min_confidence": Fraction,
    "required_itemsets": int,
    "outdeg_threshold": int,
    "outlier_factor": float,
    "extreme_factor": float,
    "drop_extremes": _parse_bool,
    "user_id_mode": UserIdMode,
    "rng_seed": int,
    "normalize": _parse_bool,
    "kmeans_max_iter": int,
    "compare_kmeans": _parse_bool,
}


def parse_values(text: str, source: str = "<config>") -> dict[str, Any]:
    """Parse ``key = value`` lines into typed field values.

    Raises:
        ConfigError: On a line without ``=``, an unknown or repeated key, or an
            unparsable value.
    """
    values: dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep:
            raise ConfigError(f"{source}:{number}: expected 'key = value', got {line!r}")
        parser = _PARSERS.get(key)
        if parser is None:
            raise ConfigError(f"{source}:{number}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{number}: key {key!r} given twice")
        try:
            values[key] = parser(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigError(f"{source}:{number}: invalid value for {key}: {value!r}") from e
    return values


def parse_config(text: str, source: str = "<config>") -> PipelineConfig:
    """Parse configuration text into a ``PipelineConfig``.

    Raises:
        ConfigError: If a line is invalid or a value is out of range.
    """
    return PipelineConfig(**parse_values(text, source))


def load_config(path: str | Path) -> PipelineConfig:
    """Read a configuration file.

    Raises:
        OSError: If the file cannot be read.
        ConfigError: If its content is invalid.
    """
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), source=str(path))
