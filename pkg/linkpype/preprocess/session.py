"""Data types produced by the preprocessing steps.

Classes:
    UserIdMode: How users are told apart.
    UserId: Identity of one user.
    Visit: One page view inside a session.
    Session: One user's contiguous visit sequence.
    PageStats: Per-page clustering features.
    Transaction: Per-session input to frequent-itemset mining.
"""

from dataclasses import dataclass, field
from enum import Enum


class UserIdMode(Enum):
    IP_ONLY = "ip_only"
    IP_AND_AGENT = "ip_and_agent"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class UserId:
    """Identity of one user.

    Attributes:
        key (str): ``ip`` in ip-only mode, ``ip|user-agent`` otherwise. Equal keys
            mean the same user.
    """

    key: str


@dataclass(frozen=True)
class Visit:
    """One page view inside a session.

    Attributes:
        page_id (int): Page index.
        entry_time (int): Request time in epoch seconds.
        dwell (float): Seconds spent on the page.
        referrer (int | None): Page index of the logged referrer, if known.
        inferred (bool): True for views re-inserted by path completion.
    """

    page_id: int
    entry_time: int
    dwell: float
    referrer: int | None = None
    inferred: bool = False


@dataclass(frozen=True)
class Session:
    """One user's contiguous visit sequence.

    Attributes:
        user (UserId): Owner of the session.
        visits (tuple[Visit, ...]): Non-empty, in entry-time order.
        incomplete (bool): True when path completion left a gap it could not
            explain with the site graph.
    """

    user: UserId
    visits: tuple[Visit, ...]
    incomplete: bool = False

    def __post_init__(self) -> None:
        if not self.visits:
            raise ValueError("A session needs at least one visit")

    @property
    def duration(self) -> float:
        """Total seconds of the session (sum of dwells)."""
        return sum(visit.dwell for visit in self.visits)

    @property
    def pages(self) -> tuple[int, ...]:
        return tuple(visit.page_id for visit in self.visits)


@dataclass(frozen=True)
class PageStats:
    """Per-page clustering features.

    Attributes:
        page_id (int): Page index.
        url (str): Page URL path.
        s (float): Average dwell seconds over all visits (``S``).
        c (int): Number of visits (``C``).
    """

    page_id: int
    url: str
    s: float
    c: int


@dataclass(frozen=True)
class Transaction:
    """Frequent-itemset mining input built from one session.

    Attributes:
        sequence (tuple[int, ...]): Visit order, repeats kept.
        items (frozenset[int]): Distinct pages of the sequence.
    """

    sequence: tuple[int, ...]
    items: frozenset[int] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", frozenset(self.sequence))
