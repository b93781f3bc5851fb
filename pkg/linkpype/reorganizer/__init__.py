"""Site reorganization for LinkPype.

Candidate links mined from sessions are matched against the page clusters, then
turned into a plan of new links that respects an out-degree cap per page. Every
accepted link is scored by how many hops it saves over the original structure.

Key Components:
    LinkProposal / ReorgPlan: Plan data types.
    match_links: Keep candidates whose pages lie in highly ranked clusters.
    build_plan: Accept candidates under the out-degree threshold.
    improved_efficiency: Percentage of the path a direct link saves.
    apply_plan: Produce the reorganized graph.
"""
