"""Synthetic access-log generation.

Simulated users walk a site graph: each one starts at the entry page 0, follows a
uniformly chosen existing out-link at every step, and restarts at page 0 when a
page has no out-links. With a back-button probability a user may first return to
the previous page of the walk before following a link; the return is cached by
the browser and never logged. Every step emits one Combined Log Format line with a
strictly increasing timestamp, the previous page as referrer and one of a few
fixed user agents. Output depends only on the inputs and the seed.
"""

import numpy as np

from linkpype.ingest.parser import format_line
from linkpype.ingest.record import LogRecord
from linkpype.sitegraph.graph import SiteGraph

USER_AGENTS = (
    "Mozilla/5.0 (X11; Linux x86_64) Firefox/128.0",
    "Mozilla/5.0 (Windows NT 10.0; Win64; x64) Chrome/126.0",
    "Mozilla/5.0 (Macintosh; Intel Mac OS X 14_5) Safari/605.1.15",
)

# 2024-01-01T00:00:00Z
BASE_TIMESTAMP = 1_704_067_200


def user_ip(user: int) -> str:
    """Deterministic client address of simulated user ``user``."""
    return f"10.{(user >> 16) & 255}.{(user >> 8) & 255}.{user & 255}"


def generate_synthetic_logs(
    graph: SiteGraph,
    n_users: int,
    steps_per_user: int,
    rng_seed: int,
    min_dwell: int = 5,
    max_dwell: int = 300,
    host: str = "www.example.com",
    back_probability: float = 0.0,
) -> list[str]:
    """Generate access-log lines from seeded random walks over ``graph``.

    Args:
        graph (SiteGraph): The site; page 0 is the entry page.
        n_users (int): Number of simulated users.
        steps_per_user (int): Page requests per user.
        rng_seed (int): Seed of the random walk and dwell times.
        min_dwell (int): Smallest gap between two requests of a user, in seconds.
        max_dwell (int): Largest gap between two requests of a user, in seconds.
        host (str): Host used in referrer URLs.
        back_probability (float): Chance that a user first presses the back
            button before following a link. The return is served from the
            browser cache, so it leaves no line: the next request comes from the
            earlier page with that page as referrer.

    Returns:
        list[str]: ``n_users * steps_per_user`` lines grouped by user. Empty when
            either count is zero.

    Raises:
        ValueError: If the graph has no pages, the dwell bounds are invalid or
            ``back_probability`` is outside ``[0, 1]``.
    """
    if graph.n < 1:
        raise ValueError("Synthetic logs need a graph with at least one page")
    if not 0 < min_dwell <= max_dwell:
        raise ValueError(f"Invalid dwell bounds: {min_dwell}..{max_dwell}")
    if not 0.0 <= back_probability <= 1.0:
        raise ValueError(f"back_probability must lie in [0, 1], got {back_probability}")
    rng = np.random.default_rng(rng_seed)
    successors = [graph.successors(page) for page in range(graph.n)]
    lines: list[str] = []
    for user in range(n_users):
        agent = USER_AGENTS[int(rng.integers(len(USER_AGENTS)))]
        timestamp = BASE_TIMESTAMP + user * 7
        page, referrer = 0, None
        trail = [0]
        for step in range(steps_per_user):
            if step > 0:
                timestamp += int(rng.integers(min_dwell, max_dwell + 1))
                if back_probability > 0 and len(trail) > 1 and rng.random() < back_probability:
                    trail.pop()
                    page = trail[-1]
                out_links = successors[page]
                if out_links:
                    page, referrer = out_links[int(rng.integers(len(out_links)))], page
                    trail.append(page)
                else:
                    page, referrer = 0, None
                    trail = [0]
            record = LogRecord(
                ip=user_ip(user),
                timestamp=timestamp,
                method="GET",
                url_path=graph.url_of[page],
                status=200,
                bytes=int(rng.integers(200, 20_000)),
                referrer=None if referrer is None else graph.url_of[referrer],
                user_agent=agent,
            )
            lines.append(format_line(record, host=host))
    return lines
