"""LinkPype: mine access logs to propose website link-structure changes.

The toolkit turns raw web-server access logs into a reorganization plan for a
site's link graph. Pages are clustered by the time users spend on them and by
how often they are visited, frequent traversal itemsets are mined from user
sessions, and the links found by both are proposed as new out-links, subject to
an out-degree budget per page.

Key Components:
    linkpype.ingest: Access-log parsing and synthetic log generation.
    linkpype.preprocess: Cleaning, user and session identification, path
        completion and formatting.
    linkpype.sitegraph: Binary adjacency model of the website.
    linkpype.clustering: Farthest-first traversal, k-means baseline and IQR
        outlier flagging.
    linkpype.mining: Apriori frequent itemsets, association rules and candidate
        links.
    linkpype.reorganizer: Link matching, plan building and Improved Efficiency.
    linkpype.pipeline: Stage chain that runs the whole process end to end.
"""

__version__ = "0.1.0"
