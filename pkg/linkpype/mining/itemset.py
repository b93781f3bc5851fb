"""Mining data types.

Classes:
    MiningParams: Support schedule and rule thresholds.
    Itemset: A frequent set of pages with its support count.
    Rule: An association rule with exact confidence.
    CandidateLink: A directed link suggested by the rules.
"""

import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction


def as_fraction(value: float | Fraction) -> Fraction:
    """Exact fraction of a threshold, reading floats by their decimal text."""
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))


def support_count_threshold(support: Fraction, n_transactions: int) -> int:
    """Smallest integer count meeting ``support`` (at least 1)."""
    return max(1, math.ceil(support * n_transactions))


@dataclass(frozen=True)
class MiningParams:
    """Support schedule and rule thresholds.

    Attributes:
        upper_bound_support (float | Fraction): First support threshold tried.
        lower_bound_support (float | Fraction): Smallest threshold tried.
        delta (float | Fraction): Step by which the threshold is lowered.
        min_confidence (float | Fraction): Minimum rule confidence.
        required_itemsets (int): Frequent itemsets wanted before the schedule
            stops.

    Example:
        ```python
        params = MiningParams(upper_bound_support=1.0, lower_bound_support=0.1)
        [float(s) for s in params.schedule()][:3]  # [1.0, 0.95, 0.9]
        ```
    """

    upper_bound_support: float | Fraction = 1.0
    lower_bound_support: float | Fraction = 0.1
    delta: float | Fraction = 0.05
    min_confidence: float | Fraction = 0.9
    required_itemsets: int = 10

    def __post_init__(self) -> None:
        lower, upper = as_fraction(self.lower_bound_support), as_fraction(self.upper_bound_support)
        if not 0 <= lower <= upper <= 1:
            raise ValueError(f"Need 0 <= lower <= upper <= 1, got {lower}, {upper}")
        if as_fraction(self.delta) <= 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if not 0 <= as_fraction(self.min_confidence) <= 1:
            raise ValueError(f"min_confidence must be in [0, 1], got {self.min_confidence}")
        if self.required_itemsets < 0:
            raise ValueError(f"required_itemsets must be non-negative, got {self.required_itemsets}")

    @classmethod
    def fixed(cls, support: float | Fraction, min_confidence: float | Fraction = 0.9) -> "MiningParams":
        """Parameters that mine at a single support threshold."""
        return cls(
            upper_bound_support=support,
            lower_bound_support=support,
            min_confidence=min_confidence,
            required_itemsets=0,
        )

    def schedule(self) -> Iterator[Fraction]:
        """Support thresholds from the upper bound down to the lower bound."""
        support = as_fraction(self.upper_bound_support)
        lower = as_fraction(self.lower_bound_support)
        step = as_fraction(self.delta)
        while support >= lower:
            yield support
            support -= step


@dataclass(frozen=True, order=True)
class Itemset:
    """A frequent set of pages.

    Attributes:
        items (tuple[int, ...]): Sorted, non-empty page ids.
        support_count (int): Transactions containing every item.
    """

    items: tuple[int, ...]
    support_count: int

    def __post_init__(self) -> None:
        if not self.items:
            raise ValueError("An itemset needs at least one item")


@dataclass(frozen=True)
class Rule:
    """An association rule ``antecedent => consequent``.

    Attributes:
        antecedent (tuple[int, ...]): Sorted page ids.
        consequent (tuple[int, ...]): Sorted page ids, disjoint from the
            antecedent.
        support_count (int): Support of antecedent and consequent together.
        antecedent_count (int): Support of the antecedent alone.
    """

    antecedent: tuple[int, ...]
    consequent: tuple[int, ...]
    support_count: int
    antecedent_count: int

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.support_count, self.antecedent_count)


@dataclass(frozen=True)
class CandidateLink:
    """A directed link suggested by the association rules.

    Attributes:
        src (int): Source page id.
        dst (int): Target page id.
        support_count (int): Sessions visiting both pages.
        confidence (Fraction): Confidence of ``{src} => {dst}``.
    """

    src: int
    dst: int
    support_count: int
    confidence: Fraction

    def sort_key(self) -> tuple[int, Fraction, int, int]:
        return (-self.support_count, -self.confidence, self.src, self.dst)
