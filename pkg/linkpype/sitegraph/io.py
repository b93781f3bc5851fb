"""Graph sources: files, logs and the synthetic demo site.

The graph file format is plain text. The first non-comment line holds the page
count ``n``; each following line ``i j`` (0-based) declares a link from page
``i`` to page ``j``. Comment lines of the form ``# url <i> <path>`` carry the URL
path of a page; other comment lines are ignored.

Functions:
    read_graph: Load a graph file.
    write_graph: Save a graph file.
    page_universe: Sorted distinct page paths of a record list.
    infer_graph: Build a graph from referrer/path pairs.
    demo_site: Deterministic synthetic site.
"""

from collections.abc import Iterable, Sequence
from pathlib import Path

import numpy as np

from linkpype.errors import GraphError
from linkpype.ingest.record import LogRecord
from linkpype.sitegraph.graph import Edge, SiteGraph, build_graph


def read_graph(path: str | Path) -> SiteGraph:
    """Load a graph file.

    Args:
        path (str | Path): Path of the graph file.

    Returns:
        SiteGraph: The loaded graph.

    Raises:
        OSError: If the file cannot be read.
        GraphError: If the file is malformed or declares an invalid edge.
    """
    n: int | None = None
    edges: list[Edge] = []
    urls: dict[int, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 3 and parts[0] == "url":
                    try:
                        urls[int(parts[1])] = parts[2]
                    except ValueError as e:
                        raise GraphError(
                            f"{path}:{line_number}: bad url comment {line!r}"
                        ) from e
                continue
            fields = line.split()
            try:
                values = [int(value) for value in fields]
            except ValueError as e:
                raise GraphError(f"{path}:{line_number}: bad line {line!r}") from e
            if n is None:
                if len(values) != 1:
                    raise GraphError(f"{path}:{line_number}: expected page count")
                n = values[0]
            elif len(values) == 2:
                edges.append((values[0], values[1]))
            else:
                raise GraphError(f"{path}:{line_number}: expected 'i j', got {line!r}")
    if n is None:
        raise GraphError(f"{path}: missing page count")
    if any(not 0 <= page < n for page in urls):
        raise GraphError(f"{path}: url comment for a page outside 0..{n - 1}")
    return build_graph(n, edges, urls)


def write_graph(graph: SiteGraph, path: str | Path) -> None:
    """Save a graph in the plain-text graph file format."""
    lines = [str(graph.n)]
    lines.extend(f"# url {page} {url}" for page, url in enumerate(graph.url_of))
    lines.extend(f"{i} {j}" for i, j in graph.edges())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def page_universe(records: Iterable[LogRecord]) -> list[str]:
    """Return the sorted distinct page paths requested in ``records``."""
    return sorted({record.url_path for record in records})


def infer_graph(records: Iterable[LogRecord], pages: Sequence[str]) -> SiteGraph:
    """Build a site graph from referrer/path pairs.

    An edge ``(r, q)`` is added for every record whose referrer ``r`` and path
    ``q`` are both known pages and differ.

    Args:
        records (Iterable[LogRecord]): Parsed (usually cleaned) records.
        pages (Sequence[str]): URL path of every page, indexed by page id.

    Returns:
        SiteGraph: The inferred graph over ``pages``.
    """
    index = {url: page for page, url in enumerate(pages)}
    edges: set[Edge] = set()
    for record in records:
        if record.referrer is None:
            continue
        src = index.get(record.referrer)
        dst = index.get(record.url_path)
        if src is not None and dst is not None and src != dst:
            edges.add((src, dst))
    return build_graph(len(pages), sorted(edges), dict(enumerate(pages)))


def demo_site(
    n_pages: int = 15, rng_seed: int = 0, branching: int = 3, max_out_degree: int = 4
) -> SiteGraph:
    """Build a deterministic synthetic site.

    Pages form a breadth-first tree rooted at the entry page 0, so every page is
    reachable from it. Each non-root page links back to its parent, and seeded
    cross links are added while a page has fewer than ``max_out_degree``
    out-links.

    Args:
        n_pages (int): Number of pages. Defaults to 15.
        rng_seed (int): Seed for the cross links. Defaults to 0.
        branching (int): Children per tree node. Defaults to 3.
        max_out_degree (int): Out-degree cap of the generated site. Defaults to 4.

    Returns:
        SiteGraph: The site, with page 0 at ``/`` and page ``p`` at
            ``/page<p>.html``.

    Raises:
        ValueError: If ``n_pages`` < 1 or ``branching`` < 1.
    """
    if n_pages < 1 or branching < 1:
        raise ValueError("demo_site needs at least one page and branching >= 1")
    rng = np.random.default_rng(rng_seed)
    adjacency = np.zeros((n_pages, n_pages), dtype=np.int8)
    for page in range(1, n_pages):
        parent = (page - 1) // branching
        adjacency[parent, page] = 1
        adjacency[page, parent] = 1
    for page in range(n_pages):
        if adjacency[page].sum() >= max_out_degree or rng.random() < 0.5:
            continue
        targets = [
            int(t)
            for t in np.flatnonzero(adjacency[page] == 0)
            if t != page
        ]
        if targets:
            adjacency[page, targets[int(rng.integers(len(targets)))]] = 1
    urls = {0: "/"} | {page: f"/page{page}.html" for page in range(1, n_pages)}
    rows, cols = np.nonzero(adjacency)
    edges = [(int(i), int(j)) for i, j in zip(rows, cols, strict=True)]
    return build_graph(n_pages, edges, urls)
