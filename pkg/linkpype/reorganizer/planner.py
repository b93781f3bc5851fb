"""Cluster matching, plan construction and plan application."""

import logging
from collections.abc import Iterable, Sequence

from linkpype.clustering.model import ClusterModel
from linkpype.errors import StalePlanError
from linkpype.mining.itemset import CandidateLink
from linkpype.reorganizer.plan import LinkProposal, MatchedLink, RejectReason, ReorgPlan
from linkpype.sitegraph.graph import SiteGraph

DEFAULT_OUTDEG_THRESHOLD = 4

_logger: logging.Logger | None = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger(__name__)
    return _logger


def improved_efficiency(t_p: int, p_t: int) -> float:
    """Percentage of a ``t_p``-hop path saved by a ``p_t``-hop alternative.

    Args:
        t_p (int): Hops of the original path, at least 1.
        p_t (int): Hops of the improved path, ``1 <= p_t <= t_p``.

    Returns:
        float: ``(t_p - p_t) / t_p * 100``.

    Raises:
        ValueError: If ``t_p`` < 1 or ``p_t`` is outside ``[1, t_p]``.

    Example:
        ```python
        improved_efficiency(4, 1)  # 75.0
        ```
    """
    if t_p < 1:
        raise ValueError(f"t_p must be at least 1, got {t_p}")
    if not 1 <= p_t <= t_p:
        raise ValueError(f"p_t must be in [1, {t_p}], got {p_t}")
    return (t_p - p_t) / t_p * 100


def match_links(
    candidates: Iterable[CandidateLink], model: ClusterModel, rank_limit: int
) -> list[MatchedLink]:
    """Keep candidates whose pages both lie in clusters ranked below ``rank_limit``.

    Clusters are ranked by descending center ``S``. Pages that were not
    clustered (filtered by thresholds or as outliers) disqualify a candidate.

    Args:
        candidates (Iterable[CandidateLink]): Sorted candidate links.
        model (ClusterModel): Clustering of the page features.
        rank_limit (int): Number of top-ranked clusters accepted.

    Returns:
        list[MatchedLink]: Surviving candidates in input order.
    """
    ranks = model.cluster_ranks()
    matched: list[MatchedLink] = []
    for link in candidates:
        src_cluster, dst_cluster = model.labels.get(link.src), model.labels.get(link.dst)
        if src_cluster is None or dst_cluster is None:
            continue
        src_rank, dst_rank = ranks[src_cluster], ranks[dst_cluster]
        if src_rank < rank_limit and dst_rank < rank_limit:
            matched.append(MatchedLink(link=link, cluster_rank=min(src_rank, dst_rank)))
    return matched


def build_plan(
    matched: Sequence[MatchedLink],
    graph: SiteGraph,
    outdeg_threshold: int = DEFAULT_OUTDEG_THRESHOLD,
) -> ReorgPlan:
    """Accept matched candidates in order under the out-degree threshold.

    A candidate ``(i, j)`` is accepted when ``i != j``, ``i`` does not already
    link to ``j``, and the working out-degree of ``i`` (original links plus links
    accepted so far) is below ``outdeg_threshold``. Accepted links are scored
    with the shortest path in the original graph.

    Args:
        matched (Sequence[MatchedLink]): Candidates in acceptance order.
        graph (SiteGraph): The original site graph.
        outdeg_threshold (int): Out-degree cap. Defaults to 4.

    Returns:
        ReorgPlan: Accepted proposals and rejected candidates with reasons.

    Raises:
        ValueError: If ``outdeg_threshold`` is negative.
        GraphError: If a candidate page is outside ``graph``.
    """
    if outdeg_threshold < 0:
        raise ValueError(f"outdeg_threshold must be non-negative, got {outdeg_threshold}")

    working_degree: dict[int, int] = {}
    accepted: set[tuple[int, int]] = set()
    distances: dict[int, list[int | None]] = {}
    proposals: list[LinkProposal] = []
    rejected: list[tuple[MatchedLink, RejectReason]] = []

    for candidate in matched:
        src, dst = candidate.src, candidate.dst
        if src == dst:
            rejected.append((candidate, RejectReason.SELF_LOOP))
            continue
        if graph.has_link(src, dst) or (src, dst) in accepted:
            rejected.append((candidate, RejectReason.EXISTS))
            continue
        degree = working_degree.setdefault(src, graph.out_degree(src))
        if degree >= outdeg_threshold:
            rejected.append((candidate, RejectReason.OUTDEG_FULL))
            continue

        if src not in distances:
            distances[src] = graph.distances_from(src)
        t_p = distances[src][dst]
        proposals.append(
            LinkProposal(
                src=src,
                dst=dst,
                support_count=candidate.link.support_count,
                confidence=candidate.link.confidence,
                cluster_rank=candidate.cluster_rank,
                t_p=t_p,
                efficiency_pct=improved_efficiency(t_p, 1) if t_p is not None else None,
            )
        )
        accepted.add((src, dst))
        working_degree[src] = degree + 1

    logger().debug(
        f"Plan accepted {len(proposals)} of {len(matched)} candidates "
        f"under out-degree threshold {outdeg_threshold}"
    )
    return ReorgPlan(
        proposals=tuple(proposals),
        outdeg_threshold=outdeg_threshold,
        rejected=tuple(rejected),
    )


def apply_plan(plan: ReorgPlan, graph: SiteGraph) -> SiteGraph:
    """Return ``graph`` with every proposed link added.

    Raises:
        StalePlanError: If ``graph`` already has a proposed link, which means the
            plan was built against a different graph.
    """
    for proposal in plan.proposals:
        if graph.has_link(proposal.src, proposal.dst):
            raise StalePlanError(
                f"Link {proposal.src} -> {proposal.dst} already exists; the plan is stale"
            )
    return graph.with_links(proposal.edge for proposal in plan.proposals)
