"""Access-log ingestion for LinkPype.

This package turns raw web-server access logs into typed records. It reads the
Common Log Format and the Combined Log Format (Common plus quoted referrer and
user agent), normalizes request paths so that one page has one identity, and
skips malformed lines instead of aborting. It can also produce synthetic logs by
simulating users that walk a site graph.

Key Components:
    LogRecord: One parsed access-log line.
    IngestReport: Counters describing a parsed stream.
    parse_line: Parse a single line, raising on malformed input.
    parse_stream: Parse many lines, skipping and counting malformed ones.
    generate_synthetic_logs: Seeded random-walk log generator.

Example:
    ```python
    from linkpype.ingest.parser import parse_file

    records, report = parse_file("access.log")
    print(report.parsed_count, report.skipped_count)
    ```
"""
