"""Formatting sessions into clustering and mining inputs.

Clustering works on one feature row per page: the average dwell seconds ``S``
and the visit count ``C``. Frequent-itemset mining works on one transaction per
session, which keeps the visit order for later tie-breaking but counts support on
the set of distinct pages.
"""

from collections.abc import Iterable, Sequence

import pandas as pd

from linkpype.preprocess.session import PageStats, Session, Transaction


def page_stats(
    sessions: Iterable[Session],
    alpha: float = 0.0,
    beta: int = 0,
    urls: Sequence[str] | None = None,
) -> list[PageStats]:
    """Aggregate per-page dwell and click features.

    Args:
        sessions (Iterable[Session]): Completed sessions.
        alpha (float): Session threshold; pages with ``S < alpha`` are dropped.
        beta (int): Click threshold; pages with ``C < beta`` are dropped.
        urls (Sequence[str] | None): URL path per page id. Pages are labelled
            ``/page<i>`` when omitted.

    Returns:
        list[PageStats]: One row per visited page meeting both thresholds,
            ordered by page id.
    """
    frame = pd.DataFrame(
        [
            (visit.page_id, visit.dwell)
            for session in sessions
            for visit in session.visits
        ],
        columns=["page_id", "dwell"],
    )
    if frame.empty:
        return []
    grouped = (
        frame.groupby("page_id", sort=True)["dwell"]
        .agg(s="mean", c="count")
        .reset_index()
    )
    kept = grouped[(grouped["s"] >= alpha) & (grouped["c"] >= beta)]
    return [
        PageStats(
            page_id=int(row.page_id),
            url=urls[int(row.page_id)] if urls is not None else f"/page{row.page_id}",
            s=float(row.s),
            c=int(row.c),
        )
        for row in kept.itertuples(index=False)
    ]


def to_transactions(sessions: Iterable[Session]) -> list[Transaction]:
    """Build one transaction per session, keeping the full visit order."""
    return [Transaction(sequence=session.pages) for session in sessions]
