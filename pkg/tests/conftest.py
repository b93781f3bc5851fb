"""Common test fixtures for LinkPype tests.

This module contains shared pytest fixtures that can be used across all test modules.
"""

from pathlib import Path

import pytest

from linkpype.ingest.synthetic import generate_synthetic_logs
from linkpype.preprocess.session import Transaction
from linkpype.sitegraph.graph import SiteGraph, build_graph
from linkpype.sitegraph.io import demo_site, write_graph

# Page ids of the lettered example pages.
A, B, C, E, J, K = 0, 1, 2, 3, 4, 5

COMMON_LINE = '127.0.0.1 - - [10/Oct/2000:13:55:36 -0700] "GET /a.html HTTP/1.0" 200 2326'


@pytest.fixture
def common_line() -> str:
    """Return a well-formed Common Log Format line."""
    return COMMON_LINE


@pytest.fixture
def combined_line() -> str:
    """Return a well-formed Combined Log Format line."""
    return f'{COMMON_LINE} "http://site/b.html" "Mozilla"'


@pytest.fixture
def lettered_transactions() -> list[Transaction]:
    """Return the three lettered example sessions."""
    return [
        Transaction((A, B, E, K)),
        Transaction((A, C, J, K)),
        Transaction((A, B, E, A, J, K)),
    ]


@pytest.fixture
def chain_graph() -> SiteGraph:
    """Return the chain 0 -> 1 -> 2."""
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def site() -> SiteGraph:
    """Return the 15-page demo site."""
    return demo_site(15, rng_seed=7)


@pytest.fixture
def synthetic_lines(site: SiteGraph) -> list[str]:
    """Return 1000 synthetic log lines over the demo site."""
    return generate_synthetic_logs(site, n_users=100, steps_per_user=10, rng_seed=7)


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    """Return a report directory that does not exist yet."""
    return tmp_path / "out"


@pytest.fixture
def site_files(tmp_path: Path, site: SiteGraph, synthetic_lines: list[str]) -> tuple[Path, Path]:
    """Write the demo site and its synthetic log; return ``(log_path, graph_path)``."""
    log_path = tmp_path / "access.log"
    graph_path = tmp_path / "site.graph"
    log_path.write_text("".join(f"{line}\n" for line in synthetic_lines), encoding="utf-8")
    write_graph(site, graph_path)
    return log_path, graph_path
