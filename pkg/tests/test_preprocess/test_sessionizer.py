"""Tests for sessionization and dwell estimation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkpype.errors import GraphError
from linkpype.ingest.record import LogRecord
from linkpype.preprocess.session import UserId
from linkpype.preprocess.sessionizer import sessionize

PAGES = {"/p0": 0, "/p1": 1, "/p2": 2}


def _visit(user: str, timestamp: int, page: int = 0, referrer: str | None = None) -> tuple[UserId, LogRecord]:
    record = LogRecord(
        ip=user,
        timestamp=timestamp,
        method="GET",
        url_path=f"/p{page}",
        status=200,
        referrer=referrer,
    )
    return UserId(user), record


def test_split_on_timeout() -> None:
    """Test that a gap longer than the timeout starts a new session."""
    sessions = sessionize(
        [_visit("u", 1000, 0), _visit("u", 1100, 1), _visit("u", 3000, 2)], PAGES, timeout=1800
    )
    assert [s.pages for s in sessions] == [(0, 1), (2,)]
    first = sessions[0]
    assert first.visits[0].dwell == 100
    # Final visit falls back to the session mean.
    assert first.visits[1].dwell == 100
    # Singleton session falls back to the global mean gap.
    assert sessions[1].visits[0].dwell == 100
    assert first.duration == 200


def test_singleton_uses_global_mean() -> None:
    """Test the global-mean dwell of a single-visit session."""
    sessions = sessionize(
        [_visit("a", 10, 0), _visit("a", 40, 1), _visit("a", 110, 2), _visit("b", 500, 0)],
        PAGES,
    )
    single = next(s for s in sessions if s.user == UserId("b"))
    assert single.visits[0].dwell == 50


def test_single_visit_overall() -> None:
    """Test that a lone visit with no gaps anywhere gets zero dwell."""
    sessions = sessionize([_visit("a", 10, 0)], PAGES)
    assert sessions[0].visits[0].dwell == 0.0


def test_interleaved_users_never_merge() -> None:
    """Test that sessions are built per user."""
    sessions = sessionize(
        [_visit("a", 10, 0), _visit("b", 20, 1), _visit("a", 30, 2), _visit("b", 40, 0)],
        PAGES,
    )
    assert [(s.user.key, s.pages) for s in sessions] == [("a", (0, 2)), ("b", (1, 0))]


def test_unsorted_input_is_ordered() -> None:
    """Test that records are ordered by time within a user."""
    sessions = sessionize([_visit("a", 30, 2), _visit("a", 10, 0)], PAGES)
    assert sessions[0].pages == (0, 2)


def test_referrer_mapped_to_page() -> None:
    """Test that known referrers become page ids and unknown ones None."""
    sessions = sessionize(
        [_visit("a", 10, 0), _visit("a", 20, 1, "/p0"), _visit("a", 30, 2, "/elsewhere")], PAGES
    )
    assert [v.referrer for v in sessions[0].visits] == [None, 0, None]


def test_unknown_page() -> None:
    """Test that a path outside the page index raises GraphError."""
    record = LogRecord(ip="a", timestamp=10, method="GET", url_path="/zzz", status=200)
    with pytest.raises(GraphError):
        sessionize([(UserId("a"), record)], PAGES)


def test_negative_timeout() -> None:
    """Test that a negative timeout is rejected."""
    with pytest.raises(ValueError):
        sessionize([], PAGES, timeout=-1)


streams = st.lists(
    st.tuples(st.sampled_from(["a", "b", "c"]), st.integers(1, 20_000), st.integers(0, 2)),
    min_size=1,
    max_size=40,
)


@settings(deadline=None, max_examples=60)
@given(streams, st.integers(0, 3000))
def test_session_properties(stream: list[tuple[str, int, int]], timeout: int) -> None:
    """Test partition, gap bounds and the dwell rule on random streams."""
    records = [_visit(user, ts, page) for user, ts, page in stream]
    sessions = sessionize(records, PAGES, timeout=timeout)

    assert sum(len(s.visits) for s in sessions) == len(records)
    by_user: dict[UserId, list] = {}
    for session in sessions:
        times = [v.entry_time for v in session.visits]
        assert all(0 <= b - a <= timeout for a, b in zip(times, times[1:]))
        for visit, following in zip(session.visits, session.visits[1:]):
            assert visit.dwell == following.entry_time - visit.entry_time
        assert all(v.dwell >= 0 for v in session.visits)
        by_user.setdefault(session.user, []).append(session)
    for user_sessions in by_user.values():
        for earlier, later in zip(user_sessions, user_sessions[1:]):
            assert later.visits[0].entry_time - earlier.visits[-1].entry_time > timeout
