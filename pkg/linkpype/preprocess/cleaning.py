"""Record-wise data cleaning.

Requests for embedded assets (images, style sheets, scripts, icons) and
responses other than ``200 OK`` / ``304 Not Modified`` do not represent page
views and are removed before sessions are built.
"""

from collections.abc import Iterable

from linkpype.ingest.record import LogRecord

ASSET_EXTENSIONS = frozenset({".gif", ".jpg", ".jpeg", ".png", ".css", ".js", ".ico"})
PAGE_STATUSES = frozenset({200, 304})


def is_asset(url_path: str, extensions: Iterable[str] = ASSET_EXTENSIONS) -> bool:
    """Return True when the path ends with an asset extension (case-insensitive)."""
    name = url_path.rsplit("/", 1)[-1].lower()
    return any(name.endswith(extension) for extension in extensions)


def clean(
    records: Iterable[LogRecord],
    asset_extensions: frozenset[str] = ASSET_EXTENSIONS,
    statuses: frozenset[int] = PAGE_STATUSES,
) -> list[LogRecord]:
    """Drop asset requests and non-page responses, preserving order.

    Args:
        records (Iterable[LogRecord]): Parsed records.
        asset_extensions (frozenset[str]): Extensions that mark asset requests.
        statuses (frozenset[int]): Statuses that count as page views.

    Returns:
        list[LogRecord]: The remaining records in input order.
    """
    return [
        record
        for record in records
        if record.status in statuses
        and not is_asset(record.url_path, asset_extensions)
    ]
