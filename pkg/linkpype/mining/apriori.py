"""Level-wise Apriori over session transactions.

Support is counted on the set of distinct pages of each session: a transaction
supports an itemset iff every page of the itemset occurs in it. Candidates of
size ``k`` are joined from frequent ``(k - 1)``-itemsets sharing a ``k - 2``
prefix and pruned unless every ``(k - 1)``-subset is frequent.
"""

import logging
from collections import Counter
from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from linkpype.mining.itemset import Itemset, MiningParams, support_count_threshold
from linkpype.preprocess.session import Transaction

_logger: logging.Logger | None = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger(__name__)
    return _logger


def _join(level: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    frequent = set(level)
    joined: list[tuple[int, ...]] = []
    for index, left in enumerate(level):
        for right in level[index + 1 :]:
            if left[:-1] != right[:-1]:
                break
            candidate = left + right[-1:]
            if all(subset in frequent for subset in combinations(candidate, len(candidate) - 1)):
                joined.append(candidate)
    return joined


def apriori(
    transactions: Sequence[Transaction], min_count: int
) -> dict[tuple[int, ...], int]:
    """Find every itemset supported by at least ``min_count`` transactions.

    Args:
        transactions (Sequence[Transaction]): Session transactions.
        min_count (int): Absolute support threshold, at least 1.

    Returns:
        dict[tuple[int, ...], int]: Sorted page tuples mapped to support counts.

    Raises:
        ValueError: If ``min_count`` < 1.
    """
    if min_count < 1:
        raise ValueError(f"min_count must be at least 1, got {min_count}")

    baskets = [transaction.items for transaction in transactions]
    singles = Counter(page for basket in baskets for page in basket)
    level = sorted((page,) for page, count in singles.items() if count >= min_count)
    support = {items: singles[items[0]] for items in level}

    while level:
        candidates = _join(level)
        logger().debug(
            f"Apriori level {len(level[0]) + 1}: {len(candidates)} candidates "
            f"from {len(level)} frequent itemsets"
        )
        counts = Counter(
            candidate
            for basket in baskets
            for candidate in candidates
            if basket.issuperset(candidate)
        )
        level = [candidate for candidate in candidates if counts[candidate] >= min_count]
        support.update((candidate, counts[candidate]) for candidate in level)
    return support


def _as_itemsets(support: dict[tuple[int, ...], int]) -> list[Itemset]:
    return sorted(
        (Itemset(items=items, support_count=count) for items, count in support.items()),
        key=lambda itemset: (len(itemset.items), itemset.items),
    )


def mine_frequent(
    transactions: Sequence[Transaction], params: MiningParams
) -> list[Itemset]:
    """Mine frequent itemsets, lowering the support threshold by ``delta``.

    The threshold starts at ``params.upper_bound_support``. While fewer than
    ``params.required_itemsets`` itemsets are frequent it is lowered by
    ``params.delta``; the last result is kept once the next threshold would fall
    below ``params.lower_bound_support``.

    Args:
        transactions (Sequence[Transaction]): Non-empty session transactions.
        params (MiningParams): Support schedule.

    Returns:
        list[Itemset]: Frequent itemsets at the final threshold, ordered by size
            and then by page ids.

    Raises:
        ValueError: If ``transactions`` is empty.

    Example:
        ```python
        transactions = [Transaction((0, 1)), Transaction((0, 2))]
        mine_frequent(transactions, MiningParams.fixed(1.0))
        # [Itemset(items=(0,), support_count=2)]
        ```
    """
    if not transactions:
        raise ValueError("mine_frequent needs at least one transaction")

    n = len(transactions)
    support: dict[tuple[int, ...], int] = {}
    threshold: Fraction | None = None
    for threshold in params.schedule():
        support = apriori(transactions, support_count_threshold(threshold, n))
        logger().debug(f"Support {float(threshold):.4f}: {len(support)} frequent itemsets")
        if len(support) >= params.required_itemsets:
            break
    else:
        if threshold is not None and len(support) < params.required_itemsets:
            logger().warning(
                f"Support schedule exhausted at {float(threshold):.4f} with "
                f"{len(support)} of {params.required_itemsets} required itemsets"
            )
    return _as_itemsets(support)
