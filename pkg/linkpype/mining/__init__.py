"""Frequent traversal mining for LinkPype.

Session transactions are mined with level-wise Apriori. The support threshold
starts at an upper bound and is lowered by a fixed delta until enough frequent
itemsets are found or a lower bound is reached. Association rules between
frequent pages are then reduced to directed candidate links.

Supports are exact integer counts and confidences exact fractions, so
threshold comparisons never depend on floating-point rounding.

Key Components:
    MiningParams: Support schedule, confidence threshold and stopping count.
    Itemset / Rule / CandidateLink: Mining results.
    mine_frequent: Apriori with the delta support schedule.
    generate_rules: Association rules above a confidence threshold.
    extract_candidate_links: One directed link per frequent page pair.
"""
