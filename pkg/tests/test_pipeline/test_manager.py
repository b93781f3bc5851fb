"""Tests for the pipeline manager and end-to-end runs."""

import logging
from fractions import Fraction
from pathlib import Path

import pytest

from linkpype import reports
from linkpype.config import PipelineConfig
from linkpype.errors import ConfigError, ExitCode, GraphError, PipelineError, StalePlanError
from linkpype.ingest.parser import format_line
from linkpype.ingest.record import LogRecord
from linkpype.ingest.synthetic import BASE_TIMESTAMP, USER_AGENTS, generate_synthetic_logs, user_ip
from linkpype.pipeline import manager
from linkpype.pipeline.stage import PipelineStage, PipelineState
from linkpype.sitegraph.graph import SiteGraph, build_graph
from linkpype.sitegraph.io import demo_site, write_graph


class RaisingStage(PipelineStage):
    name = "raising"

    def __init__(self, error: Exception):
        self.error = error

    def run(self, state: PipelineState) -> PipelineState:
        raise self.error


class CountingStage(PipelineStage):
    name = "counting"

    def run(self, state: PipelineState) -> PipelineState:
        state.summary["counted"] = 1
        return state

    def write(self, state: PipelineState) -> None:
        (state.out_dir / "counted.txt").write_text("1\n", encoding="utf-8")


def _report_bytes(out_dir: Path) -> dict[str, bytes]:
    return {path.name: path.read_bytes() for path in sorted(out_dir.iterdir())}


def test_logger() -> None:
    """Test logger creation and caching."""
    manager.PipelineManager._logger = None
    logger = manager.PipelineManager.logger()
    assert logger is not None
    assert manager.PipelineManager.logger() is logger


@pytest.mark.parametrize(
    "error, code",
    [
        (ValueError("bad"), ExitCode.INPUT),
        (OSError("missing"), ExitCode.INPUT),
        (GraphError("unknown page"), ExitCode.INPUT),
        (ConfigError("bad key"), ExitCode.USAGE),
        (StalePlanError("stale"), ExitCode.CONSISTENCY),
        (AssertionError(), ExitCode.CONSISTENCY),
        (RuntimeError("no model"), ExitCode.CONSISTENCY),
    ],
)
def test_stage_errors(tmp_path: Path, error: Exception, code: ExitCode) -> None:
    """Test that stage failures carry the stage name and exit code."""
    state = PipelineState(config=PipelineConfig(), out_dir=tmp_path)
    with pytest.raises(PipelineError) as raised:
        manager.PipelineManager([CountingStage(), RaisingStage(error)]).execute(state)
    assert raised.value.stage == "raising"
    assert raised.value.exit_code is code
    assert str(raised.value).startswith("[raising] ")


def test_persist(tmp_path: Path, caplog: pytest.LogCaptureFixture) -> None:
    """Test that reports are written only when persisting, and counts are logged."""
    out_dir = tmp_path / "a" / "b"
    state = PipelineState(config=PipelineConfig(), out_dir=out_dir)
    with caplog.at_level(logging.INFO, logger="linkpype.pipeline.manager"):
        manager.PipelineManager([CountingStage()]).execute(state)
    assert (out_dir / "counted.txt").exists()
    assert "Stage counting done: counted=1" in caplog.text

    quiet = tmp_path / "quiet"
    manager.PipelineManager([CountingStage()], persist=False).execute(
        PipelineState(config=PipelineConfig(), out_dir=quiet)
    )
    assert not quiet.exists()


def test_run_writes_reports(site_files: tuple[Path, Path], out_dir: Path) -> None:
    """Test a full run and its summary."""
    log_path, graph_path = site_files
    state = manager.run_pipeline(PipelineConfig(), log_path, graph_path, out_dir)
    names = {path.name for path in out_dir.iterdir()}
    assert names == {
        reports.RECORDS_FILE, reports.GRAPH_FILE, reports.PAGE_STATS_FILE,
        reports.TRANSACTIONS_FILE, reports.SEQUENCES_FILE, reports.CLUSTERS_FILE,
        reports.ITEMSETS_FILE, reports.RULES_FILE, reports.CANDIDATES_FILE,
        reports.PLAN_FILE, reports.SUMMARY_FILE,
    }  # fmt: skip
    summary = reports.read_summary(out_dir / reports.SUMMARY_FILE)
    assert summary["lines_parsed"] == "1000"
    assert summary["lines_skipped"] == "0"
    assert summary["users"] == "100"
    assert summary["sessions"] == "100"
    assert summary["pages"] == "15"
    assert summary["incomplete_sessions"] == "0"
    assert "mean_improved_efficiency_pct" in summary
    assert state.plan is not None
    assert int(summary["accepted_links"]) == state.plan.accepted_count


def test_back_navigation_is_completed(site: SiteGraph, tmp_path: Path, out_dir: Path) -> None:
    """Test that unlogged back-button returns are re-inserted as inferred visits."""
    lines = generate_synthetic_logs(
        site, n_users=100, steps_per_user=10, rng_seed=7, back_probability=0.5
    )
    log_path = tmp_path / "access.log"
    graph_path = tmp_path / "site.graph"
    log_path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    write_graph(site, graph_path)
    manager.run_pipeline(PipelineConfig(), log_path, graph_path, out_dir)
    summary = reports.read_summary(out_dir / reports.SUMMARY_FILE)
    assert int(summary["inferred_visits"]) > 0
    assert summary["incomplete_sessions"] == "0"
    assert summary["lines_parsed"] == "1000"


def test_run_is_deterministic(site_files: tuple[Path, Path], tmp_path: Path) -> None:
    """Test that two runs produce byte-identical reports."""
    log_path, graph_path = site_files
    config = PipelineConfig(compare_kmeans=True)
    manager.run_pipeline(config, log_path, graph_path, tmp_path / "first")
    manager.run_pipeline(config, log_path, graph_path, tmp_path / "second")
    assert _report_bytes(tmp_path / "first") == _report_bytes(tmp_path / "second")


def test_inferred_graph(site_files: tuple[Path, Path], out_dir: Path) -> None:
    """Test a run that infers the site graph from referrers."""
    log_path, _ = site_files
    state = manager.run_pipeline(PipelineConfig(), log_path, None, out_dir)
    graph = state.require_graph()
    assert graph.n == state.summary["pages"]
    assert graph.edge_count > 0


def test_degenerate_thresholds(site_files: tuple[Path, Path], out_dir: Path) -> None:
    """Test that a threshold excluding every page yields an empty plan."""
    log_path, graph_path = site_files
    config = PipelineConfig(alpha_seconds=1e9)
    state = manager.run_pipeline(config, log_path, graph_path, out_dir)
    assert state.summary["pages_with_stats"] == 0
    assert state.summary["clusters"] == 0
    assert state.summary["accepted_links"] == 0
    assert state.summary["mean_improved_efficiency_pct"] == "none"
    assert reports.read_plan(out_dir / reports.PLAN_FILE).empty


def test_graph_mismatch(site_files: tuple[Path, Path], tmp_path: Path, out_dir: Path) -> None:
    """Test that log pages missing from the graph are an input error."""
    log_path, _ = site_files
    small = tmp_path / "small.graph"
    write_graph(build_graph(2, [(0, 1)], {0: "/", 1: "/page1.html"}), small)
    with pytest.raises(PipelineError) as raised:
        manager.run_pipeline(PipelineConfig(), log_path, small, out_dir)
    assert raised.value.stage == "sessionize"
    assert raised.value.exit_code is ExitCode.INPUT


def test_missing_log(tmp_path: Path, out_dir: Path) -> None:
    """Test that an unreadable log is an input error of the ingest stage."""
    with pytest.raises(PipelineError) as raised:
        manager.run_pipeline(PipelineConfig(), tmp_path / "missing.log", None, out_dir)
    assert (raised.value.stage, raised.value.exit_code) == ("ingest", ExitCode.INPUT)


def test_parts_match_full_run(site_files: tuple[Path, Path], tmp_path: Path) -> None:
    """Test that running the chain in parts yields the same plan as one run."""
    log_path, graph_path = site_files
    config = PipelineConfig(
        min_confidence=Fraction(1, 2), lower_bound_support=Fraction(1, 20), rank_limit=2
    )
    manager.run_pipeline(config, log_path, graph_path, tmp_path / "whole")

    parts = tmp_path / "parts"
    for chain in (
        manager.ingest_stages(),
        manager.preprocess_stages(),
        manager.cluster_stages(),
        manager.mine_stages(),
        manager.plan_stages(),
    ):
        state = manager.PipelineManager(chain).execute(
            PipelineState(config=config, out_dir=parts, log_path=log_path, graph_path=graph_path)
        )
    whole = _report_bytes(tmp_path / "whole")
    split = _report_bytes(parts)
    for name in (reports.PLAN_FILE, reports.CANDIDATES_FILE, reports.CLUSTERS_FILE):
        assert split[name] == whole[name]
    assert state.plan is not None


def _traversal_triple(graph: SiteGraph) -> tuple[int, int, int]:
    for a in range(graph.n):
        if graph.out_degree(a) >= 4:
            continue
        for b in graph.successors(a):
            for c in graph.successors(b):
                if c != a and not graph.has_link(a, c):
                    return a, b, c
    raise AssertionError("demo site has no two-hop path without a shortcut")


def _visit(user: int, timestamp: int, url: str, referrer: str | None) -> str:
    record = LogRecord(
        ip=user_ip(user),
        timestamp=timestamp,
        method="GET",
        url_path=url,
        status=200,
        bytes=1024,
        referrer=referrer,
        user_agent=USER_AGENTS[0],
    )
    return format_line(record)


def test_injected_pattern_becomes_link(tmp_path: Path, out_dir: Path) -> None:
    """Test that a frequent two-hop traversal is proposed as a direct link."""
    site = demo_site(15, rng_seed=0)
    a, b, c = _traversal_triple(site)
    url = site.url_of
    lines = generate_synthetic_logs(site, n_users=50, steps_per_user=10, rng_seed=0)
    start = BASE_TIMESTAMP + 100_000
    for i in range(80):
        user, t = 1000 + i, start + 10 * i
        lines.append(_visit(user, t, url[a], None))
        lines.append(_visit(user, t + 30, url[b], url[a]))
        lines.append(_visit(user, t + 60, url[c], url[b]))
    for i in range(80):
        lines.append(_visit(2000 + i, start + 10 * i, url[c], None))

    log_path, graph_path = tmp_path / "access.log", tmp_path / "site.graph"
    log_path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    write_graph(site, graph_path)
    config = PipelineConfig(
        alpha_seconds=0.0,
        beta_clicks=0,
        drop_extremes=False,
        k_clusters=3,
        rank_limit=3,
        min_confidence=Fraction(1, 2),
        lower_bound_support=Fraction(3, 10),
        required_itemsets=1000,
    )
    manager.run_pipeline(config, log_path, graph_path, out_dir)

    plan = reports.read_plan(out_dir / reports.PLAN_FILE)
    row = plan[(plan["src"] == str(a)) & (plan["dst"] == str(c))]
    assert row["status"].tolist() == ["accepted"]
    assert row["t_p"].tolist() == ["2"]
    assert float(row["efficiency_pct"].iloc[0]) == pytest.approx(50.0)
