"""Website link-structure model for LinkPype.

The site is a directed graph with a binary adjacency matrix: entry ``X[i][j]`` is
1 when page ``i`` links to page ``j``. The matrix form makes link presence and
out-degree checks constant-time, and breadth-first search over it gives the hop
counts used to score new links.

Key Components:
    SiteGraph: Immutable adjacency matrix with URL labels and graph queries.
    build_graph: Construct a graph from an edge list.
    read_graph / write_graph: Plain-text graph file format.
    infer_graph: Build a graph from referrer/path pairs in parsed logs.
    demo_site: Deterministic synthetic site used for demos and tests.
"""
