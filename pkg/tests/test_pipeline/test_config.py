"""Tests for pipeline configuration."""

from fractions import Fraction
from pathlib import Path

import pytest

from linkpype.clustering.model import Metric
from linkpype.config import PipelineConfig, load_config, parse_config, parse_values
from linkpype.errors import ConfigError
from linkpype.preprocess.session import UserIdMode


def test_defaults() -> None:
    """Test the default thresholds."""
    config = PipelineConfig()
    assert config.k_clusters == 3
    assert config.outdeg_threshold == 4
    assert config.session_timeout_seconds == 1800
    params = config.mining_params()
    assert params.delta == Fraction(1, 20)
    assert params.min_confidence == Fraction(9, 10)
    assert params.required_itemsets == 10


def test_parse_config() -> None:
    """Test typed values, comments and blank lines."""
    config = parse_config(
        """
        # thresholds
        alpha_seconds = 10
        beta_clicks = 2
        metric = manhattan
        min_confidence = 2/3
        lower_bound_support = 0.2
        drop_extremes = no
        user_id_mode = ip_only
        """
    )
    assert config.alpha_seconds == 10.0
    assert config.beta_clicks == 2
    assert config.metric is Metric.MANHATTAN
    assert config.min_confidence == Fraction(2, 3)
    assert config.lower_bound_support == Fraction(1, 5)
    assert config.drop_extremes is False
    assert config.user_id_mode is UserIdMode.IP_ONLY


@pytest.mark.parametrize(
    "text, message",
    [
        ("k_clusters", "expected 'key = value'"),
        ("kclusters = 3", "unknown key"),
        ("k_clusters = 3\nk_clusters = 4", "given twice"),
        ("k_clusters = three", "invalid value"),
        ("metric = cosine", "invalid value"),
        ("drop_extremes = maybe", "invalid value"),
        ("delta = 1/0", "invalid value"),
    ],
)
def test_parse_errors(text: str, message: str) -> None:
    """Test that malformed lines name the source and line."""
    with pytest.raises(ConfigError, match=message) as error:
        parse_values(text, source="run.conf")
    assert str(error.value).startswith("run.conf:")


@pytest.mark.parametrize(
    "text",
    [
        "k_clusters = 0",
        "rank_limit = 0",
        "alpha_seconds = -1",
        "outdeg_threshold = -2",
        "outlier_factor = 4",
        "lower_bound_support = 0.8\nupper_bound_support = 0.5",
        "delta = 0",
        "min_confidence = 3/2",
    ],
)
def test_out_of_range(text: str) -> None:
    """Test that invalid values are configuration errors."""
    with pytest.raises(ConfigError):
        parse_config(text)


def test_load_config(tmp_path: Path) -> None:
    """Test reading a configuration file."""
    path = tmp_path / "run.conf"
    path.write_text("k_clusters = 5\nrng_seed = 9\n", encoding="utf-8")
    config = load_config(path)
    assert (config.k_clusters, config.rng_seed) == (5, 9)
    with pytest.raises(OSError):
        load_config(tmp_path / "missing.conf")


def test_with_overrides() -> None:
    """Test that None is ignored and unknown keys are rejected."""
    config = PipelineConfig().with_overrides(k_clusters=4, rng_seed=None)
    assert config.k_clusters == 4
    assert config.rng_seed == 0
    with pytest.raises(ConfigError, match="bogus"):
        config.with_overrides(bogus=1)
    with pytest.raises(ConfigError):
        config.with_overrides(k_clusters=0)


def test_items_read_back() -> None:
    """Test that rendered items parse back to the same configuration."""
    config = PipelineConfig(
        alpha_seconds=2.5,
        metric=Metric.MANHATTAN,
        min_confidence=Fraction(2, 3),
        normalize=True,
        user_id_mode=UserIdMode.IP_ONLY,
    )
    text = "\n".join(f"{key} = {value}" for key, value in config.items())
    assert parse_config(text) == config
