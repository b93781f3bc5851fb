"""Reorganization plan types.

Classes:
    RejectReason: Why a candidate link was not proposed.
    MatchedLink: A candidate link that passed cluster matching.
    LinkProposal: An accepted link with its hop-count score.
    ReorgPlan: Accepted proposals and rejected candidates.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from linkpype.mining.itemset import CandidateLink


class RejectReason(Enum):
    EXISTS = "exists"
    OUTDEG_FULL = "outdeg_full"
    SELF_LOOP = "self_loop"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MatchedLink:
    """A candidate link whose pages both lie in accepted clusters.

    Attributes:
        link (CandidateLink): The mined candidate.
        cluster_rank (int): The better (lower) cluster rank of its two pages.
    """

    link: CandidateLink
    cluster_rank: int

    @property
    def src(self) -> int:
        return self.link.src

    @property
    def dst(self) -> int:
        return self.link.dst


@dataclass(frozen=True)
class LinkProposal:
    """An accepted new link.

    Attributes:
        src (int): Source page id.
        dst (int): Target page id, different from ``src``.
        support_count (int): Sessions visiting both pages.
        confidence (Fraction): Confidence of ``{src} => {dst}``.
        cluster_rank (int): Better cluster rank of the two pages, 0 is best.
        t_p (int | None): Hops from ``src`` to ``dst`` in the original graph,
            None when unreachable.
        efficiency_pct (float | None): Improved efficiency of the direct link,
            present exactly when ``t_p`` is.
    """

    src: int
    dst: int
    support_count: int
    confidence: Fraction
    cluster_rank: int
    t_p: int | None = None
    efficiency_pct: float | None = None

    def __post_init__(self) -> None:
        if self.src == self.dst:
            raise ValueError(f"A proposal cannot link page {self.src} to itself")
        if (self.t_p is None) != (self.efficiency_pct is None):
            raise ValueError("efficiency_pct must be present exactly when t_p is")

    @property
    def edge(self) -> tuple[int, int]:
        return (self.src, self.dst)


@dataclass(frozen=True)
class ReorgPlan:
    """A reorganization plan built against one graph.

    Attributes:
        proposals (tuple[LinkProposal, ...]): Accepted links in acceptance order.
        outdeg_threshold (int): Out-degree cap applied while building.
        rejected (tuple[tuple[MatchedLink, RejectReason], ...]): Candidates not
            accepted, with the reason.
    """

    proposals: tuple[LinkProposal, ...] = ()
    outdeg_threshold: int = 4
    rejected: tuple[tuple[MatchedLink, RejectReason], ...] = field(default=())

    @property
    def accepted_count(self) -> int:
        return len(self.proposals)


def mean_efficiency(plan: ReorgPlan) -> float | None:
    """Unweighted mean efficiency over the scored proposals of ``plan``.

    Returns:
        float | None: None when no proposal has a reachable target.
    """
    scores = [p.efficiency_pct for p in plan.proposals if p.efficiency_pct is not None]
    if not scores:
        return None
    return float(np.mean(scores))
