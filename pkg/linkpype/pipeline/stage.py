"""Pipeline stage interface and shared state.

Classes:
    PipelineState: Everything a run reads, produces and counts.
    PipelineStage: Abstract base class of a pipeline step.
"""

import abc
from dataclasses import dataclass, field
from pathlib import Path

from linkpype.clustering.model import ClusterModel, FeaturePoint
from linkpype.config import PipelineConfig
from linkpype.errors import ExitCode
from linkpype.ingest.record import IngestReport, LogRecord
from linkpype.mining.itemset import CandidateLink, Itemset, Rule
from linkpype.preprocess.session import PageStats, Session, Transaction, UserId
from linkpype.reorganizer.plan import MatchedLink, ReorgPlan
from linkpype.sitegraph.graph import SiteGraph


@dataclass
class PipelineState:
    """Inputs and results of one pipeline run.

    Stages fill the result fields in order. ``summary`` collects the counts that
    end up in the run summary, in insertion order.
    """

    config: PipelineConfig
    out_dir: Path
    log_path: Path | None = None
    graph_path: Path | None = None

    records: list[LogRecord] = field(default_factory=list)
    ingest_report: IngestReport | None = None
    users: list[tuple[UserId, LogRecord]] = field(default_factory=list)
    graph: SiteGraph | None = None
    sessions: list[Session] = field(default_factory=list)
    page_stats: list[PageStats] = field(default_factory=list)
    points: list[FeaturePoint] = field(default_factory=list)
    model: ClusterModel | None = None
    covering_radius: float = 0.0
    transactions: list[Transaction] = field(default_factory=list)
    itemsets: list[Itemset] = field(default_factory=list)
    rules: list[Rule] = field(default_factory=list)
    candidates: list[CandidateLink] = field(default_factory=list)
    matched: list[MatchedLink] = field(default_factory=list)
    plan: ReorgPlan | None = None

    summary: dict[str, object] = field(default_factory=dict)

    def require_graph(self) -> SiteGraph:
        if self.graph is None:
            raise RuntimeError("No site graph has been loaded or inferred")
        return self.graph

    def require_model(self) -> ClusterModel:
        if self.model is None:
            raise RuntimeError("No cluster model has been built or loaded")
        return self.model


class PipelineStage(abc.ABC):
    """Abstract base class of a pipeline step.

    Subclasses set ``name`` (used in log lines and error tags) and implement
    ``run``. Stages that produce a report also implement ``write``, which the
    manager calls only when the run persists its results.

    Attributes:
        name (str): Stage name.
        exit_code (ExitCode): Exit status used when the stage fails with an input
            error. Consistency failures always map to ``ExitCode.CONSISTENCY``.

    Example:
        ```python
        class CountPages(PipelineStage):
            name = "count_pages"

            def run(self, state: PipelineState) -> PipelineState:
                state.summary["pages"] = len(state.page_stats)
                return state
        ```
    """

    name: str = "stage"
    exit_code: ExitCode = ExitCode.INPUT

    @abc.abstractmethod
    def run(self, state: PipelineState) -> PipelineState:
        """Execute the stage on ``state`` and return it."""
        ...

    def write(self, state: PipelineState) -> None:
        """Persist the stage results into ``state.out_dir``."""
        return None
