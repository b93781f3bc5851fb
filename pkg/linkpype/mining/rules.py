"""Association rules and candidate links.

Rules are generated from every frequent itemset of two or more pages and kept
when their confidence reaches the threshold. Confidence is compared by
cross-multiplying integer counts, so no rounding is involved.

Candidate links keep only rules between single pages. Each unordered pair of
pages yields at most one directed link, pointing along the higher-confidence
rule. When both directions are equally confident, the link follows the order in
which the two pages were first visited in most sessions, and finally the lower
page id.
"""

from collections.abc import Iterable, Sequence
from fractions import Fraction
from itertools import combinations

from linkpype.mining.itemset import CandidateLink, Itemset, Rule, as_fraction
from linkpype.preprocess.session import Transaction


def _count(items: tuple[int, ...], transactions: Sequence[Transaction]) -> int:
    return sum(1 for transaction in transactions if transaction.items.issuperset(items))


def generate_rules(
    itemsets: Iterable[Itemset],
    transactions: Sequence[Transaction],
    min_confidence: float | Fraction,
) -> list[Rule]:
    """Emit every rule of every frequent itemset meeting ``min_confidence``.

    Args:
        itemsets (Iterable[Itemset]): Output of ``mine_frequent`` over
            ``transactions``.
        transactions (Sequence[Transaction]): Used only to count an antecedent
            that is missing from ``itemsets``.
        min_confidence (float | Fraction): Confidence threshold in [0, 1].

    Returns:
        list[Rule]: Rules ordered by itemset, then antecedent size, then
            antecedent pages.
    """
    itemsets = list(itemsets)
    threshold = as_fraction(min_confidence)
    support = {itemset.items: itemset.support_count for itemset in itemsets}

    rules: list[Rule] = []
    for itemset in itemsets:
        if len(itemset.items) < 2:
            continue
        for size in range(1, len(itemset.items)):
            for antecedent in combinations(itemset.items, size):
                antecedent_count = support.get(antecedent)
                if antecedent_count is None:
                    antecedent_count = _count(antecedent, transactions)
                if itemset.support_count * threshold.denominator < threshold.numerator * antecedent_count:
                    continue
                rules.append(
                    Rule(
                        antecedent=antecedent,
                        consequent=tuple(p for p in itemset.items if p not in antecedent),
                        support_count=itemset.support_count,
                        antecedent_count=antecedent_count,
                    )
                )
    return rules


def _first_visit_votes(src: int, dst: int, transactions: Sequence[Transaction]) -> int:
    """Sessions where ``src`` is first visited before ``dst`` minus the reverse."""
    votes = 0
    for transaction in transactions:
        sequence = transaction.sequence
        if src in transaction.items and dst in transaction.items:
            votes += 1 if sequence.index(src) < sequence.index(dst) else -1
    return votes


def extract_candidate_links(
    rules: Iterable[Rule], transactions: Sequence[Transaction]
) -> list[CandidateLink]:
    """Reduce single-page rules to one directed link per page pair.

    Args:
        rules (Iterable[Rule]): Output of ``generate_rules``.
        transactions (Sequence[Transaction]): Ordered sessions, used to break
            confidence ties.

    Returns:
        list[CandidateLink]: Links sorted by support count and confidence
            (both descending), then source and target page ids.
    """
    pairwise = {
        (rule.antecedent[0], rule.consequent[0]): rule
        for rule in rules
        if len(rule.antecedent) == 1 and len(rule.consequent) == 1
    }

    links: list[CandidateLink] = []
    for low, high in sorted({tuple(sorted(pair)) for pair in pairwise}):
        forward, backward = pairwise.get((low, high)), pairwise.get((high, low))
        if forward is None or backward is None:
            chosen = forward or backward
        elif forward.confidence != backward.confidence:
            chosen = max(forward, backward, key=lambda rule: rule.confidence)
        else:
            chosen = backward if _first_visit_votes(low, high, transactions) < 0 else forward
        assert chosen is not None
        links.append(
            CandidateLink(
                src=chosen.antecedent[0],
                dst=chosen.consequent[0],
                support_count=chosen.support_count,
                confidence=chosen.confidence,
            )
        )
    return sorted(links, key=CandidateLink.sort_key)
