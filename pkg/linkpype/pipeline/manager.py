"""Pipeline manager and the predefined stage chains.

The manager runs stages in order on one ``PipelineState``, persists their
reports and turns any failure into a ``PipelineError`` tagged with the failing
stage and the exit code the command line should return.

Functions:
    full_stages: The complete log-to-plan chain.
    ingest_stages / preprocess_stages / cluster_stages / mine_stages /
    plan_stages: The chain cut into independently runnable parts.
    run_pipeline: Execute the full chain.
"""

import logging
from pathlib import Path

from linkpype.config import PipelineConfig
from linkpype.errors import ConfigError, ExitCode, PipelineError, StalePlanError
from linkpype.pipeline import stages
from linkpype.pipeline.stage import PipelineStage, PipelineState


def _exit_code(stage: PipelineStage, error: Exception) -> ExitCode:
    if isinstance(error, ConfigError):
        return ExitCode.USAGE
    if isinstance(error, StalePlanError | AssertionError):
        return ExitCode.CONSISTENCY
    if isinstance(error, OSError | ValueError):
        return stage.exit_code
    return ExitCode.CONSISTENCY


class PipelineManager:
    """Runs a chain of pipeline stages.

    Attributes:
        stages (list[PipelineStage]): Stages in execution order.
        persist (bool): Whether stage reports are written to the output directory.

    Example:
        ```python
        state = PipelineState(config=PipelineConfig(), out_dir=Path("out"), log_path=Path("access.log"))
        state = PipelineManager(full_stages()).execute(state)
        print(state.summary["accepted_links"])
        ```
    """

    _logger: logging.Logger | None = None

    @classmethod
    def logger(cls) -> logging.Logger:
        if cls._logger is None:
            cls._logger = logging.getLogger(__name__)
        return cls._logger

    def __init__(self, stages: list[PipelineStage], persist: bool = True):
        self.stages = stages
        self.persist = persist

    def execute(self, state: PipelineState) -> PipelineState:
        """Run every stage on ``state``.

        Raises:
            PipelineError: If a stage fails or the output directory cannot be
                created.
        """
        if self.persist:
            try:
                state.out_dir.mkdir(parents=True, exist_ok=True)
            except OSError as e:
                raise PipelineError("setup", str(e), ExitCode.INPUT) from e

        for stage in self.stages:
            known = set(state.summary)
            try:
                state = stage.run(state)
                if self.persist:
                    stage.write(state)
            except PipelineError:
                raise
            except Exception as e:
                raise PipelineError(stage.name, str(e) or type(e).__name__, _exit_code(stage, e)) from e
            counts = ", ".join(
                f"{key}={value}" for key, value in state.summary.items() if key not in known
            )
            self.logger().info(f"Stage {stage.name} done{': ' + counts if counts else ''}")
        return state


def full_stages() -> list[PipelineStage]:
    return [
        *ingest_stages(),
        stages.IdentifyUsersStage(),
        stages.GraphStage(),
        stages.SessionizeStage(),
        stages.CompletePathsStage(),
        stages.PageStatsStage(),
        stages.TransactionsStage(),
        stages.OutlierStage(),
        stages.ClusterStage(),
        stages.MineStage(),
        stages.RulesStage(),
        stages.CandidatesStage(),
        stages.MatchStage(),
        stages.PlanStage(),
    ]


def ingest_stages() -> list[PipelineStage]:
    return [stages.IngestStage(), stages.CleanStage()]


def preprocess_stages() -> list[PipelineStage]:
    return [
        stages.LoadRecordsStage(),
        stages.IdentifyUsersStage(),
        stages.GraphStage(),
        stages.SessionizeStage(),
        stages.CompletePathsStage(),
        stages.PageStatsStage(),
        stages.TransactionsStage(),
    ]


def cluster_stages() -> list[PipelineStage]:
    return [stages.LoadPageStatsStage(), stages.OutlierStage(), stages.ClusterStage()]


def mine_stages() -> list[PipelineStage]:
    return [
        stages.LoadTransactionsStage(),
        stages.MineStage(),
        stages.RulesStage(),
        stages.CandidatesStage(),
    ]


def plan_stages() -> list[PipelineStage]:
    return [
        stages.LoadGraphStage(),
        stages.LoadClustersStage(),
        stages.LoadCandidatesStage(),
        stages.MatchStage(),
        stages.PlanStage(),
    ]


def run_pipeline(
    config: PipelineConfig,
    log_path: Path,
    graph_path: Path | None,
    out_dir: Path,
) -> PipelineState:
    """Run the full pipeline from a log file to a reorganization plan.

    Every report is written into ``out_dir``; identical inputs produce
    byte-identical reports.

    Args:
        config (PipelineConfig): Thresholds and switches.
        log_path (Path): Access log in Common or Combined Log Format.
        graph_path (Path | None): Site graph file. The graph is inferred from
            referrers when None.
        out_dir (Path): Report directory, created when missing.

    Returns:
        PipelineState: The final state, including the plan and summary.

    Raises:
        PipelineError: If any stage fails.
    """
    state = PipelineState(
        config=config, out_dir=out_dir, log_path=log_path, graph_path=graph_path
    )
    return PipelineManager(full_stages()).execute(state)
