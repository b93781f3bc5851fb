"""Concrete pipeline stages.

Compute stages run one step of the log-to-plan pipeline on the shared state and
record their counts in the run summary. Load stages restore the state of an
earlier, separately executed part of the chain from its report files.
"""

import logging
from pathlib import Path

from linkpype import reports
from linkpype.bench import labels_agreement
from linkpype.clustering.farthest_first import covering_radius, farthest_first
from linkpype.clustering.kmeans import kmeans_baseline
from linkpype.clustering.model import ClusterModel, FeaturePoint, min_max_normalize
from linkpype.clustering.outliers import OutlierFlag, iqr_outliers
from linkpype.ingest.parser import parse_file
from linkpype.mining.apriori import mine_frequent
from linkpype.mining.rules import extract_candidate_links, generate_rules
from linkpype.pipeline.stage import PipelineStage, PipelineState
from linkpype.preprocess.cleaning import clean
from linkpype.preprocess.formatting import page_stats, to_transactions
from linkpype.preprocess.path_completion import complete_paths
from linkpype.preprocess.sessionizer import identify_users, sessionize
from linkpype.reorganizer.plan import mean_efficiency
from linkpype.reorganizer.planner import build_plan, match_links
from linkpype.sitegraph.io import infer_graph, page_universe, read_graph, write_graph


def _out(state: PipelineState, name: str) -> Path:
    return state.out_dir / name


class IngestStage(PipelineStage):
    name = "ingest"

    def run(self, state: PipelineState) -> PipelineState:
        if state.log_path is None:
            raise ValueError("No log file given")
        state.records, state.ingest_report = parse_file(state.log_path)
        state.summary["lines_parsed"] = state.ingest_report.parsed_count
        state.summary["lines_skipped"] = state.ingest_report.skipped_count
        return state


class CleanStage(PipelineStage):
    name = "clean"

    def run(self, state: PipelineState) -> PipelineState:
        state.records = clean(state.records)
        state.summary["records_clean"] = len(state.records)
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_records(state.records, _out(state, reports.RECORDS_FILE))


class LoadRecordsStage(PipelineStage):
    name = "load_records"

    def run(self, state: PipelineState) -> PipelineState:
        state.records = reports.read_records(_out(state, reports.RECORDS_FILE))
        state.summary["records_clean"] = len(state.records)
        return state


class IdentifyUsersStage(PipelineStage):
    name = "identify_users"

    def run(self, state: PipelineState) -> PipelineState:
        state.users = identify_users(state.records, state.config.user_id_mode)
        state.summary["users"] = len({user for user, _ in state.users})
        return state


class GraphStage(PipelineStage):
    """Load the supplied site graph, or infer one from referrers."""

    name = "graph"

    def run(self, state: PipelineState) -> PipelineState:
        if state.graph_path is not None:
            state.graph = read_graph(state.graph_path)
        else:
            state.graph = infer_graph(state.records, page_universe(state.records))
        state.summary["pages"] = state.graph.n
        state.summary["links"] = state.graph.edge_count
        return state

    def write(self, state: PipelineState) -> None:
        write_graph(state.require_graph(), _out(state, reports.GRAPH_FILE))


class LoadGraphStage(PipelineStage):
    name = "load_graph"

    def run(self, state: PipelineState) -> PipelineState:
        state.graph = read_graph(state.graph_path or _out(state, reports.GRAPH_FILE))
        state.summary["pages"] = state.graph.n
        state.summary["links"] = state.graph.edge_count
        return state


class SessionizeStage(PipelineStage):
    name = "sessionize"

    def run(self, state: PipelineState) -> PipelineState:
        graph = state.require_graph()
        page_index = {url: page for page, url in enumerate(graph.url_of)}
        state.sessions = sessionize(
            state.users, page_index, state.config.session_timeout_seconds
        )
        state.summary["sessions"] = len(state.sessions)
        return state


class CompletePathsStage(PipelineStage):
    name = "complete_paths"

    _logger: logging.Logger | None = None

    @classmethod
    def logger(cls) -> logging.Logger:
        if cls._logger is None:
            cls._logger = logging.getLogger(__name__)
        return cls._logger

    def run(self, state: PipelineState) -> PipelineState:
        graph = state.require_graph()
        state.sessions = [complete_paths(session, graph) for session in state.sessions]
        incomplete = sum(1 for session in state.sessions if session.incomplete)
        if incomplete:
            self.logger().warning(
                f"{incomplete} sessions have navigation gaps the site graph cannot explain"
            )
        state.summary["inferred_visits"] = sum(
            1 for session in state.sessions for visit in session.visits if visit.inferred
        )
        state.summary["incomplete_sessions"] = incomplete
        return state


class PageStatsStage(PipelineStage):
    name = "page_stats"

    def run(self, state: PipelineState) -> PipelineState:
        state.page_stats = page_stats(
            state.sessions,
            alpha=state.config.alpha_seconds,
            beta=state.config.beta_clicks,
            urls=state.require_graph().url_of,
        )
        state.summary["pages_with_stats"] = len(state.page_stats)
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_page_stats(state.page_stats, _out(state, reports.PAGE_STATS_FILE))


class LoadPageStatsStage(PipelineStage):
    name = "load_page_stats"

    def run(self, state: PipelineState) -> PipelineState:
        state.page_stats = reports.read_page_stats(_out(state, reports.PAGE_STATS_FILE))
        state.summary["pages_with_stats"] = len(state.page_stats)
        return state


class OutlierStage(PipelineStage):
    """Flag dwell and click outliers; drop extreme pages when configured.

    ``S`` and ``C`` are flagged independently, and a page counts as extreme when
    either feature is.
    """

    name = "outliers"

    def run(self, state: PipelineState) -> PipelineState:
        config = state.config
        stats = state.page_stats
        if not stats:
            state.points = []
            state.summary["pages_outlier"] = 0
            state.summary["pages_extreme"] = 0
            state.summary["pages_clustered"] = 0
            return state

        s_flags = iqr_outliers([p.s for p in stats], config.outlier_factor, config.extreme_factor)
        c_flags = iqr_outliers([float(p.c) for p in stats], config.outlier_factor, config.extreme_factor)
        extreme = [OutlierFlag.EXTREME in pair for pair in zip(s_flags, c_flags, strict=True)]
        outlier = [
            not is_extreme and OutlierFlag.OUTLIER in pair
            for is_extreme, pair in zip(extreme, zip(s_flags, c_flags, strict=True), strict=True)
        ]
        state.points = [
            FeaturePoint(p.page_id, p.s, float(p.c))
            for p, is_extreme in zip(stats, extreme, strict=True)
            if not (config.drop_extremes and is_extreme)
        ]
        state.summary["pages_outlier"] = sum(outlier)
        state.summary["pages_extreme"] = sum(extreme)
        state.summary["pages_clustered"] = len(state.points)
        return state


class ClusterStage(PipelineStage):
    name = "cluster"

    def run(self, state: PipelineState) -> PipelineState:
        config = state.config
        points = min_max_normalize(state.points) if config.normalize else state.points
        if points:
            state.model = farthest_first(points, config.k_clusters, config.metric)
            state.covering_radius = covering_radius(points, state.model)
        else:
            state.model = ClusterModel.empty(config.k_clusters, config.metric)
            state.covering_radius = 0.0
        state.points = points
        state.summary["clusters"] = len(state.model.centers)
        state.summary["distance_evals"] = state.model.distance_evals
        state.summary["covering_radius"] = state.covering_radius
        if config.compare_kmeans and points:
            baseline = kmeans_baseline(
                points,
                config.k_clusters,
                config.metric,
                max_iter=config.kmeans_max_iter,
                rng_seed=config.rng_seed,
            )
            state.summary["kmeans_distance_evals"] = baseline.distance_evals
            state.summary["kmeans_iterations"] = baseline.iterations
            state.summary["kmeans_labels_agreement"] = labels_agreement(
                state.model.labels, baseline.labels
            )
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_clusters(
            state.require_model(),
            state.points,
            _out(state, reports.CLUSTERS_FILE),
            covering_radius=state.covering_radius,
        )


class LoadClustersStage(PipelineStage):
    name = "load_clusters"

    def run(self, state: PipelineState) -> PipelineState:
        state.model = reports.read_clusters(_out(state, reports.CLUSTERS_FILE))
        state.summary["pages_clustered"] = len(state.model.labels)
        state.summary["clusters"] = len(state.model.centers)
        return state


class TransactionsStage(PipelineStage):
    name = "transactions"

    def run(self, state: PipelineState) -> PipelineState:
        state.transactions = to_transactions(state.sessions)
        state.summary["transactions"] = len(state.transactions)
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_transactions(state.transactions, _out(state, reports.TRANSACTIONS_FILE))
        reports.write_sequences(state.transactions, _out(state, reports.SEQUENCES_FILE))


class LoadTransactionsStage(PipelineStage):
    name = "load_transactions"

    def run(self, state: PipelineState) -> PipelineState:
        state.transactions = reports.read_sequences(_out(state, reports.SEQUENCES_FILE))
        state.summary["transactions"] = len(state.transactions)
        return state


class MineStage(PipelineStage):
    name = "mine"

    def run(self, state: PipelineState) -> PipelineState:
        state.itemsets = (
            mine_frequent(state.transactions, state.config.mining_params())
            if state.transactions
            else []
        )
        state.summary["frequent_itemsets"] = len(state.itemsets)
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_itemsets(state.itemsets, _out(state, reports.ITEMSETS_FILE))


class RulesStage(PipelineStage):
    name = "rules"

    def run(self, state: PipelineState) -> PipelineState:
        state.rules = generate_rules(
            state.itemsets, state.transactions, state.config.min_confidence
        )
        state.summary["rules"] = len(state.rules)
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_rules(state.rules, _out(state, reports.RULES_FILE))


class CandidatesStage(PipelineStage):
    name = "candidates"

    def run(self, state: PipelineState) -> PipelineState:
        state.candidates = extract_candidate_links(state.rules, state.transactions)
        state.summary["candidates"] = len(state.candidates)
        return state

    def write(self, state: PipelineState) -> None:
        reports.write_candidates(state.candidates, _out(state, reports.CANDIDATES_FILE))


class LoadCandidatesStage(PipelineStage):
    name = "load_candidates"

    def run(self, state: PipelineState) -> PipelineState:
        state.candidates = reports.read_candidates(_out(state, reports.CANDIDATES_FILE))
        state.summary["candidates"] = len(state.candidates)
        return state


class MatchStage(PipelineStage):
    name = "match"

    def run(self, state: PipelineState) -> PipelineState:
        state.matched = match_links(
            state.candidates, state.require_model(), state.config.rank_limit
        )
        state.summary["matched_candidates"] = len(state.matched)
        return state


class PlanStage(PipelineStage):
    name = "plan"

    def run(self, state: PipelineState) -> PipelineState:
        state.plan = build_plan(
            state.matched, state.require_graph(), state.config.outdeg_threshold
        )
        efficiency = mean_efficiency(state.plan)
        state.summary["accepted_links"] = state.plan.accepted_count
        state.summary["rejected_links"] = len(state.plan.rejected)
        state.summary["mean_improved_efficiency_pct"] = (
            "none" if efficiency is None else efficiency
        )
        return state

    def write(self, state: PipelineState) -> None:
        assert state.plan is not None
        reports.write_plan(state.plan, state.require_graph(), _out(state, reports.PLAN_FILE))
        reports.write_summary(state.summary, _out(state, reports.SUMMARY_FILE))
