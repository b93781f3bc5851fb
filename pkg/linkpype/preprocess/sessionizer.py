"""User and session identification.

Users are told apart by client IP, optionally combined with the user agent so
that several people behind one address stay separate. Each user's requests are
ordered by time and split into sessions wherever two consecutive requests are
more than ``timeout`` seconds apart.

Dwell time is observable only between two requests: a visit's dwell is the gap to
the next request of the same session. The last visit of a session gets the mean
dwell of the session's other visits, or the global mean dwell when the session has
a single visit.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence

import numpy as np

from linkpype.errors import GraphError
from linkpype.ingest.record import LogRecord
from linkpype.preprocess.session import Session, UserId, UserIdMode, Visit

DEFAULT_SESSION_TIMEOUT = 1800

_logger: logging.Logger | None = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger(__name__)
    return _logger


def user_key(record: LogRecord, mode: UserIdMode) -> UserId:
    """Return the identity of the user who issued ``record``."""
    if mode is UserIdMode.IP_ONLY:
        return UserId(record.ip)
    return UserId(f"{record.ip}|{record.user_agent or '-'}")


def identify_users(
    records: Iterable[LogRecord], mode: UserIdMode = UserIdMode.IP_AND_AGENT
) -> list[tuple[UserId, LogRecord]]:
    """Pair every record with its user.

    Args:
        records (Iterable[LogRecord]): Cleaned records.
        mode (UserIdMode): ``IP_AND_AGENT`` (default) treats two records as the
            same user iff IP and user agent both match; ``IP_ONLY`` uses the IP
            alone.

    Returns:
        list[tuple[UserId, LogRecord]]: One pair per record, in input order.
    """
    return [(user_key(record, mode), record) for record in records]


def _split(
    records: Sequence[LogRecord], timeout: int
) -> list[list[LogRecord]]:
    runs: list[list[LogRecord]] = []
    for record in records:
        if runs and record.timestamp - runs[-1][-1].timestamp <= timeout:
            runs[-1].append(record)
        else:
            runs.append([record])
    return runs


def sessionize(
    records: Iterable[tuple[UserId, LogRecord]],
    page_index: Mapping[str, int],
    timeout: int = DEFAULT_SESSION_TIMEOUT,
) -> list[Session]:
    """Split each user's requests into sessions and estimate dwell times.

    Args:
        records (Iterable[tuple[UserId, LogRecord]]): Output of ``identify_users``.
        page_index (Mapping[str, int]): Page id of every URL path.
        timeout (int): Largest gap, in seconds, between two requests of one
            session. Defaults to 1800.

    Returns:
        list[Session]: Sessions ordered by user key, then start time. Every
            record appears in exactly one session of its user.

    Raises:
        ValueError: If ``timeout`` is negative.
        GraphError: If a record requests a path missing from ``page_index``.
    """
    if timeout < 0:
        raise ValueError(f"Session timeout must be non-negative, got {timeout}")
    by_user: dict[UserId, list[LogRecord]] = defaultdict(list)
    for user, record in records:
        if record.url_path not in page_index:
            raise GraphError(f"Requested path {record.url_path!r} is not a known page")
        by_user[user].append(record)

    runs: list[tuple[UserId, list[LogRecord]]] = []
    for user in sorted(by_user):
        ordered = sorted(by_user[user], key=lambda record: record.timestamp)
        runs.extend((user, run) for run in _split(ordered, timeout))

    gaps = [
        float(later.timestamp - earlier.timestamp)
        for _, run in runs
        for earlier, later in zip(run, run[1:], strict=False)
    ]
    global_mean = float(np.mean(gaps)) if gaps else 0.0

    sessions: list[Session] = []
    for user, run in runs:
        dwells = [
            float(later.timestamp - earlier.timestamp)
            for earlier, later in zip(run, run[1:], strict=False)
        ]
        dwells.append(float(np.mean(dwells)) if dwells else global_mean)
        visits = tuple(
            Visit(
                page_id=page_index[record.url_path],
                entry_time=record.timestamp,
                dwell=dwell,
                referrer=(
                    page_index.get(record.referrer)
                    if record.referrer is not None
                    else None
                ),
            )
            for record, dwell in zip(run, dwells, strict=True)
        )
        sessions.append(Session(user=user, visits=visits))
    logger().debug(
        f"Built {len(sessions)} sessions for {len(by_user)} users "
        f"(global mean dwell {global_mean:.1f}s)"
    )
    return sessions
