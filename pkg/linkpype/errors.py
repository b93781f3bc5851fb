"""Exception types raised by LinkPype.

Every error specializes the built-in exception a caller would already expect, so
code that catches ``ValueError`` or ``RuntimeError`` keeps working, while the
pipeline can still tell the failure kinds apart.

Classes:
    LogParseError: A log line that does not follow the Common/Combined format.
    GraphError: An invalid site graph or graph file.
    ConfigError: An invalid pipeline configuration.
    StalePlanError: A reorganization plan that no longer matches its graph.
    PipelineError: A stage failure tagged with the stage name and exit code.
"""

from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes of the command-line interface."""

    OK = 0
    USAGE = 1
    INPUT = 2
    CONSISTENCY = 3


class LogParseError(ValueError):
    """Raised when a log line cannot be parsed.

    Attributes:
        line (str): The offending line content.
        line_number (int | None): 1-based position in the input, when known.
    """

    def __init__(self, message: str, line: str, line_number: int | None = None):
        super().__init__(message)
        self.line = line
        self.line_number = line_number


class GraphError(ValueError):
    """Raised for out-of-range pages, self-loops and malformed graph files."""


class ConfigError(ValueError):
    """Raised for unknown keys and invalid values in a pipeline configuration."""


class StalePlanError(RuntimeError):
    """Raised when a plan proposes a link that the target graph already has."""


class PipelineError(Exception):
    """Raised when a pipeline stage fails.

    Attributes:
        stage (str): Name of the failing stage.
        exit_code (ExitCode): Exit status the command line should return.
    """

    def __init__(self, stage: str, message: str, exit_code: ExitCode):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.exit_code = exit_code
