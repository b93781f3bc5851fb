"""Typed containers for parsed access-log data.

Classes:
    LogRecord: One parsed Common/Combined Log Format line.
    IngestReport: Parse counters for a stream of lines.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class LogRecord:
    """One parsed access-log line.

    Attributes:
        ip (str): Client host identifier.
        timestamp (int): Seconds since the epoch, derived from the local time and
            zone of the log entry.
        method (str): HTTP verb.
        url_path (str): Normalized request path. Always starts with ``/``; query
            string and fragment are stripped and a trailing slash is removed
            except for the root.
        status (int): HTTP status in ``[100, 599]``.
        bytes (int | None): Response size, ``None`` when logged as ``-``.
        referrer (str | None): Normalized referrer path, ``None`` when absent.
        user_agent (str | None): User agent string, ``None`` when absent.
    """

    ip: str
    timestamp: int
    method: str
    url_path: str
    status: int
    bytes: int | None = None
    referrer: str | None = None
    user_agent: str | None = None

    def __post_init__(self) -> None:
        if not 100 <= self.status <= 599:
            raise ValueError(f"HTTP status out of range: {self.status}")
        if not self.url_path.startswith("/"):
            raise ValueError(f"URL path must start with '/': {self.url_path!r}")
        if self.timestamp <= 0:
            raise ValueError(f"Timestamp must be positive: {self.timestamp}")


@dataclass(frozen=True)
class IngestReport:
    """Counters describing a parsed stream.

    Attributes:
        parsed_count (int): Lines turned into records.
        skipped_count (int): Malformed lines that were skipped.
        first_error_line (int | None): 1-based position of the first skipped line.
    """

    parsed_count: int = 0
    skipped_count: int = 0
    first_error_line: int | None = None

    @property
    def total_lines(self) -> int:
        return self.parsed_count + self.skipped_count
