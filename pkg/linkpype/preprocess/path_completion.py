"""Path completion against the site graph.

Browsers serve back-button navigation from their cache, so the server never sees
those requests. When a session moves from page ``p`` to page ``q`` although ``p``
has no link to ``q``, the user must have gone back to an earlier page that does
link to ``q``. The missing views are re-inserted here:

1. If ``q`` was logged with a referrer ``r`` that links to ``q`` and ``r``
   appears earlier in the session, the pages between ``p`` and the last
   occurrence of ``r`` are re-inserted in reverse order, followed by ``r``.
2. Otherwise the session is scanned backwards for the most recent page with a
   link to ``q``, and the backtrack to it is inserted the same way.
3. If no such page exists the gap is left in place and the session is marked
   incomplete.

Re-inserted views carry zero dwell and the entry time of ``q``, so the dwell of
every non-final visit still equals the gap to the next entry.
"""

import logging

from linkpype.preprocess.session import Session, Visit
from linkpype.sitegraph.graph import SiteGraph

_logger: logging.Logger | None = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger(__name__)
    return _logger


def _last_index(path: list[Visit], page: int) -> int | None:
    for index in range(len(path) - 1, -1, -1):
        if path[index].page_id == page:
            return index
    return None


def _backtrack_anchor(path: list[Visit], target: Visit, graph: SiteGraph) -> int | None:
    referrer = target.referrer
    if referrer is not None and graph.has_link(referrer, target.page_id):
        index = _last_index(path, referrer)
        if index is not None:
            return index
    for index in range(len(path) - 1, -1, -1):
        if graph.has_link(path[index].page_id, target.page_id):
            return index
    return None


def complete_paths(session: Session, graph: SiteGraph) -> Session:
    """Re-insert back-navigation views missing from a session.

    Args:
        session (Session): A session whose pages all belong to ``graph``.
        graph (SiteGraph): The site structure.

    Returns:
        Session: The completed session. Unchanged when every consecutive pair is
            a link (or a reload of the same page). ``incomplete`` is set when a
            gap could not be explained.

    Raises:
        GraphError: If a page of the session is outside the graph.
    """
    path: list[Visit] = [session.visits[0]]
    incomplete = session.incomplete
    for visit in session.visits[1:]:
        previous = path[-1].page_id
        if previous == visit.page_id or graph.has_link(previous, visit.page_id):
            path.append(visit)
            continue
        anchor = _backtrack_anchor(path, visit, graph)
        if anchor is None:
            incomplete = True
            path.append(visit)
            continue
        backtrack = [path[index].page_id for index in range(len(path) - 2, anchor - 1, -1)]
        path.extend(
            Visit(page_id=page, entry_time=visit.entry_time, dwell=0.0, inferred=True)
            for page in backtrack
        )
        path.append(visit)

    if incomplete and not session.incomplete:
        logger().debug(f"Session of {session.user.key} has an unexplained gap")
    if len(path) == len(session.visits) and incomplete == session.incomplete:
        return session
    return Session(user=session.user, visits=tuple(path), incomplete=incomplete)
