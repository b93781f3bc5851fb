"""Common and Combined Log Format parsing.

This module converts access-log text into ``LogRecord`` values. A line is accepted
in the Common Log Format::

    127.0.0.1 - - [10/Oct/2000:13:55:36 -0700] "GET /a.html HTTP/1.0" 200 2326

and in the Combined Log Format, which appends a quoted referrer and a quoted user
agent. Request paths and referrers are normalized so that one page has one
identity: scheme and host are dropped, query strings and fragments are stripped,
and a trailing slash is removed except for the root path.

Functions:
    normalize_path: Reduce a request target or referrer URL to a page path.
    parse_line: Parse one line or raise ``LogParseError``.
    parse_stream: Parse many lines, skipping and counting malformed ones.
    parse_file: Parse a UTF-8 log file.
    format_line: Serialize a record back to Combined Log Format.
"""

import logging
import re
from collections.abc import Iterable
from datetime import datetime, timedelta, timezone
from pathlib import Path
from urllib.parse import urlsplit

from linkpype.errors import LogParseError
from linkpype.ingest.record import IngestReport, LogRecord

UTC = timezone.utc

MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")  # fmt: skip
_MONTH_INDEX = {name: index for index, name in enumerate(MONTHS, start=1)}

_LINE_RE = re.compile(
    r"^(?P<ip>\S+) \S+ \S+ \[(?P<time>[^\]]+)\] "
    r'"(?P<request>[^"]*)" (?P<status>\S+) (?P<bytes>\S+)'
    r'(?: "(?P<referrer>[^"]*)" "(?P<user_agent>[^"]*)")?\s*$',
    re.ASCII,
)
_TIME_RE = re.compile(
    r"^(?P<day>\d{2})/(?P<month>[A-Z][a-z]{2})/(?P<year>\d{4})"
    r":(?P<hour>\d{2}):(?P<minute>\d{2}):(?P<second>\d{2})"
    r" (?P<sign>[+-])(?P<tz_hour>\d{2})(?P<tz_minute>\d{2})$",
    re.ASCII,
)

_logger: logging.Logger | None = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger(__name__)
    return _logger


def normalize_path(target: str) -> str | None:
    """Reduce a request target or referrer URL to a page path.

    Args:
        target (str): A path such as ``/a.html?x=1`` or a full URL such as
            ``http://site/b.html``.

    Returns:
        str | None: The normalized path, or None when the target has no usable
            path (for example ``*``, an opaque string or a malformed host).
    """
    try:
        parts = urlsplit(target)
    except ValueError:
        return None
    path = parts.path
    if parts.netloc and not path:
        path = "/"
    if not path.startswith("/"):
        return None
    if len(path) > 1:
        path = path.rstrip("/") or "/"
    return path


def _is_decimal(field: str) -> bool:
    return field.isascii() and field.isdecimal()


def parse_timestamp(value: str) -> int:
    """Convert a ``dd/Mon/yyyy:HH:MM:SS ±zzzz`` field to epoch seconds.

    Raises:
        ValueError: If the field does not follow the format.
    """
    match = _TIME_RE.match(value)
    if match is None or match["month"] not in _MONTH_INDEX:
        raise ValueError(f"Unparseable timestamp: {value!r}")
    offset = timedelta(hours=int(match["tz_hour"]), minutes=int(match["tz_minute"]))
    if match["sign"] == "-":
        offset = -offset
    try:
        moment = datetime(
            int(match["year"]),
            _MONTH_INDEX[match["month"]],
            int(match["day"]),
            int(match["hour"]),
            int(match["minute"]),
            int(match["second"]),
            tzinfo=timezone(offset),
        )
        return int(moment.timestamp())
    except OverflowError as e:
        raise ValueError(f"Timestamp out of range: {value!r}") from e


def format_timestamp(timestamp: int) -> str:
    """Render epoch seconds as a UTC ``dd/Mon/yyyy:HH:MM:SS +0000`` field."""
    moment = datetime.fromtimestamp(timestamp, tz=UTC)
    return (
        f"{moment.day:02d}/{MONTHS[moment.month - 1]}/{moment.year:04d}:"
        f"{moment.hour:02d}:{moment.minute:02d}:{moment.second:02d} +0000"
    )


def parse_line(line: str) -> LogRecord:
    """Parse one Common or Combined Log Format line.

    Args:
        line (str): A single log line, with or without its trailing newline.

    Returns:
        LogRecord: The parsed record. A referrer of ``-`` maps to None and a
            referrer URL with a host prefix is reduced to its path.

    Raises:
        LogParseError: If the line has the wrong field layout, an unparseable
            timestamp, a non-numeric status or size, or an invalid request.

    Example:
        ```python
        record = parse_line(
            '127.0.0.1 - - [10/Oct/2000:13:55:36 -0700] "GET /a.html HTTP/1.0" 200 2326'
        )
        assert record.url_path == "/a.html"
        ```
    """
    text = line.rstrip("\r\n")
    match = _LINE_RE.match(text)
    if match is None:
        raise LogParseError(f"Malformed log line: {text[:120]!r}", line=text)

    try:
        timestamp = parse_timestamp(match["time"])
    except ValueError as e:
        raise LogParseError(str(e), line=text) from e

    request = match["request"].split()
    if len(request) not in (2, 3):
        raise LogParseError(f"Malformed request field: {match['request']!r}", text)
    method, target = request[0], request[1]
    url_path = normalize_path(target)
    if url_path is None:
        raise LogParseError(f"Request target is not a path: {target!r}", line=text)

    if not _is_decimal(match["status"]):
        raise LogParseError(f"Non-numeric status: {match['status']!r}", line=text)
    status = int(match["status"])

    size_field = match["bytes"]
    if size_field == "-":
        size = None
    elif _is_decimal(size_field):
        size = int(size_field)
    else:
        raise LogParseError(f"Non-numeric response size: {size_field!r}", line=text)

    referrer_field = match["referrer"]
    referrer = (
        normalize_path(referrer_field)
        if referrer_field not in (None, "", "-")
        else None
    )
    agent_field = match["user_agent"]
    user_agent = agent_field if agent_field not in (None, "", "-") else None

    try:
        return LogRecord(
            ip=match["ip"],
            timestamp=timestamp,
            method=method,
            url_path=url_path,
            status=status,
            bytes=size,
            referrer=referrer,
            user_agent=user_agent,
        )
    except ValueError as e:
        raise LogParseError(str(e), line=text) from e


def parse_stream(lines: Iterable[str]) -> tuple[list[LogRecord], IngestReport]:
    """Parse a sequence of lines, skipping malformed ones.

    Malformed lines never abort the stream: they are counted and the position of
    the first one is reported. Output order follows input order.

    Args:
        lines (Iterable[str]): Log lines.

    Returns:
        tuple[list[LogRecord], IngestReport]: The records and the parse counters.
    """
    records: list[LogRecord] = []
    skipped = 0
    first_error_line: int | None = None
    for line_number, line in enumerate(lines, start=1):
        try:
            records.append(parse_line(line))
        except LogParseError as e:
            skipped += 1
            if first_error_line is None:
                first_error_line = line_number
                logger().warning(f"Skipping malformed line {line_number}: {e}")
    if skipped > 1:
        logger().warning(f"Skipped {skipped} malformed lines in total")
    report = IngestReport(
        parsed_count=len(records),
        skipped_count=skipped,
        first_error_line=first_error_line,
    )
    return records, report


def parse_file(path: str | Path) -> tuple[list[LogRecord], IngestReport]:
    """Parse an access-log file.

    Args:
        path (str | Path): Path to a UTF-8 or ASCII text file. Undecodable bytes
            are replaced rather than rejected.

    Returns:
        tuple[list[LogRecord], IngestReport]: As ``parse_stream``.

    Raises:
        OSError: If the file cannot be opened or read.
    """
    with open(path, encoding="utf-8", errors="replace") as handle:
        return parse_stream(handle)


def format_line(record: LogRecord, host: str = "www.example.com") -> str:
    """Serialize a record to one Combined Log Format line.

    The referrer is written as an absolute URL on ``host`` and the timestamp in
    UTC, so ``parse_line(format_line(record))`` reproduces the record.

    Args:
        record (LogRecord): The record to serialize.
        host (str): Host name used to build the referrer URL.

    Returns:
        str: The log line, without a trailing newline.
    """
    size = "-" if record.bytes is None else str(record.bytes)
    referrer = "-" if record.referrer is None else f"http://{host}{record.referrer}"
    agent = "-" if record.user_agent is None else record.user_agent
    return (
        f"{record.ip} - - [{format_timestamp(record.timestamp)}] "
        f'"{record.method} {record.url_path} HTTP/1.1" {record.status} {size} '
        f'"{referrer}" "{agent}"'
    )
