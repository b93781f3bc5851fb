"""Tests for graph files, graph inference and the demo site."""

from pathlib import Path

import pytest

from linkpype.errors import GraphError
from linkpype.ingest.record import LogRecord
from linkpype.sitegraph.graph import SiteGraph, build_graph
from linkpype.sitegraph.io import demo_site, infer_graph, page_universe, read_graph, write_graph


def _record(path: str, referrer: str | None) -> LogRecord:
    return LogRecord(
        ip="10.0.0.1", timestamp=100, method="GET", url_path=path, status=200, referrer=referrer
    )


def test_write_then_read(tmp_path: Path) -> None:
    """Test that a written graph file loads back to an equal graph."""
    graph = build_graph(3, [(0, 1), (2, 0)], {0: "/", 1: "/a.html", 2: "/b.html"})
    path = tmp_path / "site.graph"
    write_graph(graph, path)
    assert read_graph(path) == graph


def test_read_without_url_comments(tmp_path: Path) -> None:
    """Test the plain format with default URLs and ignored comments."""
    path = tmp_path / "site.graph"
    path.write_text("# demo\n3\n0 1\n\n1 2\n", encoding="utf-8")
    graph = read_graph(path)
    assert graph.edges() == [(0, 1), (1, 2)]
    assert graph.url_of[2] == "/page2"


@pytest.mark.parametrize(
    "content",
    [
        "",
        "x\n",
        "3\n0 1 2\n",
        "3\n0 5\n",
        "3\n1 1\n",
        "2\n# url 4 /x\n",
        "2 2\n",
    ],
)
def test_read_malformed(tmp_path: Path, content: str) -> None:
    """Test that malformed graph files raise GraphError."""
    path = tmp_path / "site.graph"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(GraphError):
        read_graph(path)


def test_page_universe() -> None:
    """Test the sorted distinct page paths of a record list."""
    records = [_record("/b.html", None), _record("/a.html", None), _record("/b.html", "/a.html")]
    assert page_universe(records) == ["/a.html", "/b.html"]


def test_infer_graph() -> None:
    """Test that referrer/path pairs of known pages become edges."""
    records = [
        _record("/", None),
        _record("/a.html", "/"),
        _record("/b.html", "/a.html"),
        _record("/b.html", "/b.html"),
        _record("/a.html", "/external.html"),
    ]
    pages = page_universe(records)
    graph = infer_graph(records, pages)
    assert graph.url_of == ("/", "/a.html", "/b.html")
    assert graph.edges() == [(0, 1), (1, 2)]


def test_demo_site_shape(site: SiteGraph) -> None:
    """Test that the demo site is reachable from page 0 and respects the degree cap."""
    assert site.n == 15
    assert site.url_of[0] == "/"
    assert all(hops is not None for hops in site.distances_from(0))
    assert all(site.out_degree(page) <= 4 for page in range(site.n))


def test_demo_site_deterministic() -> None:
    """Test that the same seed builds the same site."""
    assert demo_site(15, rng_seed=3) == demo_site(15, rng_seed=3)


def test_demo_site_validation() -> None:
    """Test that an empty site is rejected."""
    with pytest.raises(ValueError):
        demo_site(0)
