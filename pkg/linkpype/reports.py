"""Report files written and read by the pipeline.

Every report is plain text with a one-line header. Tables are tab-separated and
written through pandas, floats in their shortest round-trip form, so reading a
report back yields exactly the values that were written and rewriting it yields
the same bytes. Intermediate reports consumed by a later subcommand have a
reader next to their writer.

Files in an output directory:
    records.tsv: Cleaned log records.
    site.graph: The site graph in the graph file format.
    page_stats.tsv: ``page_id, url, S, C`` per clustered-eligible page.
    transactions.txt: Distinct pages of every session, sorted.
    sequences.txt: Visit order of every session.
    clusters.tsv: Cluster label per page, with ``# key=value`` model lines.
    itemsets.txt: Frequent itemsets with support counts.
    rules.txt: Association rules with support and confidence.
    candidates.tsv: Directed candidate links.
    plan.tsv: Accepted and rejected links.
    summary.txt: ``key=value`` run summary.
"""

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from pathlib import Path

import pandas as pd

from linkpype.clustering.model import ClusterModel, FeaturePoint, Metric
from linkpype.ingest.record import LogRecord
from linkpype.mining.itemset import CandidateLink, Itemset, Rule
from linkpype.preprocess.session import PageStats, Transaction
from linkpype.reorganizer.plan import ReorgPlan
from linkpype.sitegraph.graph import SiteGraph

RECORDS_FILE = "records.tsv"
GRAPH_FILE = "site.graph"
PAGE_STATS_FILE = "page_stats.tsv"
TRANSACTIONS_FILE = "transactions.txt"
SEQUENCES_FILE = "sequences.txt"
CLUSTERS_FILE = "clusters.tsv"
ITEMSETS_FILE = "itemsets.txt"
RULES_FILE = "rules.txt"
CANDIDATES_FILE = "candidates.tsv"
PLAN_FILE = "plan.tsv"
SUMMARY_FILE = "summary.txt"

_RECORD_COLUMNS = ["ip", "timestamp", "method", "url_path", "status", "bytes", "referrer", "user_agent"]
_PLAN_COLUMNS = [
    "src", "dst", "src_url", "dst_url", "support", "confidence",
    "cluster_rank", "t_p", "efficiency_pct", "status",
]  # fmt: skip


def _write_table(frame: pd.DataFrame, path: Path) -> None:
    frame.to_csv(path, sep="\t", index=False, lineterminator="\n")


def _read_table(path: Path, comment: str | None = None) -> pd.DataFrame:
    return pd.read_csv(
        path,
        sep="\t",
        comment=comment,
        dtype=str,
        keep_default_na=False,
    )


def _ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _optional(text: str) -> str | None:
    return text or None


def write_records(records: Iterable[LogRecord], path: Path) -> None:
    frame = pd.DataFrame(
        [
            (r.ip, r.timestamp, r.method, r.url_path, r.status,
             "" if r.bytes is None else r.bytes, r.referrer or "", r.user_agent or "")  # fmt: skip
            for r in records
        ],
        columns=_RECORD_COLUMNS,
    )
    _write_table(frame, path)


def read_records(path: Path) -> list[LogRecord]:
    """Read records written by ``write_records``."""
    return [
        LogRecord(
            ip=row.ip,
            timestamp=int(row.timestamp),
            method=row.method,
            url_path=row.url_path,
            status=int(row.status),
            bytes=int(row.bytes) if row.bytes else None,
            referrer=_optional(row.referrer),
            user_agent=_optional(row.user_agent),
        )
        for row in _read_table(path).itertuples(index=False)
    ]


def write_page_stats(stats: Iterable[PageStats], path: Path) -> None:
    frame = pd.DataFrame(
        [(row.page_id, row.url, row.s, row.c) for row in stats],
        columns=["page_id", "url", "S", "C"],
    )
    _write_table(frame, path)


def read_page_stats(path: Path) -> list[PageStats]:
    return [
        PageStats(page_id=int(row.page_id), url=row.url, s=float(row.S), c=int(row.C))
        for row in _read_table(path).itertuples(index=False)
    ]


def _write_pages(header: str, rows: Iterable[Sequence[int]], path: Path) -> None:
    lines = [header, *(" ".join(str(page) for page in row) for row in rows)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_transactions(transactions: Iterable[Transaction], path: Path) -> None:
    """Write the distinct pages of every session, one sorted set per line."""
    _write_pages("items", (sorted(t.items) for t in transactions), path)


def write_sequences(transactions: Iterable[Transaction], path: Path) -> None:
    """Write the visit order of every session, one session per line."""
    _write_pages("sequence", (t.sequence for t in transactions), path)


def read_sequences(path: Path) -> list[Transaction]:
    lines = path.read_text(encoding="utf-8").splitlines()[1:]
    return [Transaction(tuple(int(page) for page in line.split())) for line in lines if line]


def write_clusters(
    model: ClusterModel,
    points: Sequence[FeaturePoint],
    path: Path,
    covering_radius: float = 0.0,
) -> None:
    """Write cluster labels with the model parameters as ``#`` lines.

    The table has one row per clustered page: ``page_id, s, c, cluster, rank``.
    """
    ranks = model.cluster_ranks()
    header = [
        f"# k={model.k}",
        f"# metric={model.metric.value}",
        f"# distance_evals={model.distance_evals}",
        f"# covering_radius={covering_radius!r}",
        *(f"# center={index} {s!r} {c!r}" for index, (s, c) in enumerate(model.centers)),
    ]
    frame = pd.DataFrame(
        [
            (p.page_id, p.s, p.c, model.labels[p.page_id], ranks[model.labels[p.page_id]])
            for p in points
        ],
        columns=["page_id", "s", "c", "cluster", "rank"],
    )
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(header) + "\n")
        frame.to_csv(handle, sep="\t", index=False, lineterminator="\n")


def read_clusters(path: Path) -> ClusterModel:
    """Rebuild the cluster model written by ``write_clusters``."""
    meta: dict[str, str] = {}
    centers: list[tuple[float, float]] = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("# "):
                continue
            key, _, value = line[2:].strip().partition("=")
            if key == "center":
                _, s, c = value.split()
                centers.append((float(s), float(c)))
            else:
                meta[key] = value
    table = _read_table(path, comment="#")
    return ClusterModel(
        k=int(meta["k"]),
        centers=tuple(centers),
        labels={int(row.page_id): int(row.cluster) for row in table.itertuples(index=False)},
        metric=Metric(meta["metric"]),
        distance_evals=int(meta["distance_evals"]),
    )


def write_itemsets(itemsets: Iterable[Itemset], path: Path) -> None:
    lines = ["items\tsupport"]
    lines.extend(
        f"{' '.join(str(page) for page in itemset.items)}\t{itemset.support_count}"
        for itemset in itemsets
    )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_rules(rules: Iterable[Rule], path: Path) -> None:
    """Write rules as ``i -> j <tab> support <tab> confidence-as-ratio``."""
    lines = ["rule\tsupport\tconfidence"]
    for rule in rules:
        antecedent = " ".join(str(page) for page in rule.antecedent)
        consequent = " ".join(str(page) for page in rule.consequent)
        lines.append(f"{antecedent} -> {consequent}\t{rule.support_count}\t{_ratio(rule.confidence)}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_candidates(candidates: Iterable[CandidateLink], path: Path) -> None:
    frame = pd.DataFrame(
        [(c.src, c.dst, c.support_count, _ratio(c.confidence)) for c in candidates],
        columns=["src", "dst", "support", "confidence"],
    )
    _write_table(frame, path)


def read_candidates(path: Path) -> list[CandidateLink]:
    return [
        CandidateLink(
            src=int(row.src),
            dst=int(row.dst),
            support_count=int(row.support),
            confidence=Fraction(row.confidence),
        )
        for row in _read_table(path).itertuples(index=False)
    ]


def write_plan(plan: ReorgPlan, graph: SiteGraph, path: Path) -> None:
    """Write accepted proposals, then rejected candidates, one per row."""
    rows = [
        (p.src, p.dst, graph.url_of[p.src], graph.url_of[p.dst], p.support_count,
         _ratio(p.confidence), p.cluster_rank, "" if p.t_p is None else p.t_p,
         "" if p.efficiency_pct is None else p.efficiency_pct, "accepted")  # fmt: skip
        for p in plan.proposals
    ]
    rows.extend(
        (m.src, m.dst, graph.url_of[m.src], graph.url_of[m.dst], m.link.support_count,
         _ratio(m.link.confidence), m.cluster_rank, "", "", reason.value)  # fmt: skip
        for m, reason in plan.rejected
    )
    _write_table(pd.DataFrame(rows, columns=_PLAN_COLUMNS), path)


def read_plan(path: Path) -> pd.DataFrame:
    """Read a plan report as a string-valued table."""
    return _read_table(path)


def write_summary(summary: Mapping[str, object], path: Path) -> None:
    lines = [f"{key}={value}" for key, value in summary.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_summary(path: Path) -> dict[str, str]:
    summary: dict[str, str] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        key, sep, value = line.partition("=")
        if sep:
            summary[key] = value
    return summary
