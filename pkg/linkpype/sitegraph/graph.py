"""Binary adjacency model of a website.

A site is a directed graph whose nodes are pages and whose edges are the links
between them. The graph is stored as a dense ``n x n`` matrix ``X`` with
``X[i][j] = 1`` when page ``i`` links to page ``j`` and ``0`` otherwise, which
makes link presence and out-degree queries direct lookups. Self-loops are not
allowed. Graph values are immutable: link insertion returns a new graph.

Classes:
    SiteGraph: Immutable binary adjacency matrix with URL labels.

Functions:
    build_graph: Construct a graph from an edge list.
"""

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from linkpype.errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class SiteGraph:
    """Immutable directed site graph.

    Attributes:
        X (numpy.ndarray): ``n x n`` read-only matrix of 0/1 entries, zero
            diagonal.
        url_of (tuple[str, ...]): URL path of every page, indexed by page id.

    Example:
        ```python
        graph = build_graph(3, [(0, 1), (1, 2)], {0: "/", 1: "/a", 2: "/b"})
        assert graph.has_link(0, 1)
        assert graph.shortest_path_len(0, 2) == 2
        ```
    """

    X: npt.NDArray[np.int8]
    url_of: tuple[str, ...]
    _page_of: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = self.X.shape[0]
        if self.X.shape != (n, n):
            raise GraphError(f"Adjacency matrix must be square, got {self.X.shape}")
        if len(self.url_of) != n:
            raise GraphError(f"Expected {n} URLs, got {len(self.url_of)}")
        if n and np.any(np.diagonal(self.X)):
            raise GraphError("Self-loops are not allowed")
        self.X.setflags(write=False)
        object.__setattr__(
            self, "_page_of", {url: page for page, url in enumerate(self.url_of)}
        )

    @property
    def n(self) -> int:
        """Number of pages."""
        return int(self.X.shape[0])

    @property
    def edge_count(self) -> int:
        return int(self.X.sum())

    def page_of(self, url: str) -> int | None:
        """Return the page id of a URL path, or None when it is not a page."""
        return self._page_of.get(url)

    def edges(self) -> list[Edge]:
        """Return every edge ``(i, j)`` in row-major order."""
        rows, cols = np.nonzero(self.X)
        return [(int(i), int(j)) for i, j in zip(rows, cols, strict=True)]

    def has_link(self, i: int, j: int) -> bool:
        """Return True when page ``i`` links to page ``j``.

        Raises:
            GraphError: If an index is out of range.
        """
        self._check_index(i)
        self._check_index(j)
        return bool(self.X[i, j])

    def out_degree(self, i: int) -> int:
        """Return the number of out-links of page ``i`` (row sum of ``X``).

        Raises:
            GraphError: If the index is out of range.
        """
        self._check_index(i)
        return int(self.X[i].sum())

    def successors(self, i: int) -> list[int]:
        self._check_index(i)
        return [int(j) for j in np.flatnonzero(self.X[i])]

    def distances_from(self, i: int) -> list[int | None]:
        """Breadth-first hop counts from page ``i`` to every page.

        Returns:
            list[int | None]: Hop count per page, None for unreachable pages.
        """
        self._check_index(i)
        dist: list[int | None] = [None] * self.n
        dist[i] = 0
        queue = deque([i])
        while queue:
            page = queue.popleft()
            hops = dist[page]
            assert hops is not None
            for neighbor in np.flatnonzero(self.X[page]):
                if dist[neighbor] is None:
                    dist[neighbor] = hops + 1
                    queue.append(int(neighbor))
        return dist

    def shortest_path_len(self, i: int, j: int) -> int | None:
        """Minimum number of links on a directed path from ``i`` to ``j``.

        Returns:
            int | None: 0 when ``i == j``, None when ``j`` is unreachable.

        Raises:
            GraphError: If an index is out of range.
        """
        self._check_index(j)
        if i == j:
            self._check_index(i)
            return 0
        return self.distances_from(i)[j]

    def with_links(self, edges: Iterable[Edge]) -> "SiteGraph":
        """Return a new graph with the given links added.

        Raises:
            GraphError: If an edge is out of range or a self-loop.
        """
        matrix = self.X.copy()
        for i, j in edges:
            self._check_edge(i, j)
            matrix[i, j] = 1
        return SiteGraph(X=matrix, url_of=self.url_of)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SiteGraph):
            return NotImplemented
        return self.url_of == other.url_of and bool(np.array_equal(self.X, other.X))

    def __hash__(self) -> int:
        return hash((self.url_of, self.X.tobytes()))

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise GraphError(f"Page index {i} out of range for {self.n} pages")

    def _check_edge(self, i: int, j: int) -> None:
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise GraphError(f"Self-loop edge ({i}, {j}) is not allowed")


def build_graph(
    n: int, edges: Iterable[Edge], urls: Mapping[int, str] | None = None
) -> SiteGraph:
    """Construct a site graph from an edge list.

    Duplicate edges collapse. Pages without an entry in ``urls`` are labelled
    ``/page<i>``.

    Args:
        n (int): Number of pages.
        edges (Iterable[tuple[int, int]]): Links ``(i, j)`` with ``0 <= i, j < n``.
        urls (Mapping[int, str] | None): URL path per page id.

    Returns:
        SiteGraph: The graph with ``X[i][j] = 1`` exactly for the listed edges.

    Raises:
        GraphError: If ``n`` is negative, or an edge is out of range or a
            self-loop.
    """
    if n < 0:
        raise GraphError(f"Page count must be non-negative, got {n}")
    urls = urls or {}
    url_of = tuple(urls.get(page, f"/page{page}") for page in range(n))
    empty = SiteGraph(X=np.zeros((n, n), dtype=np.int8), url_of=url_of)
    return empty.with_links(edges)
