"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: ConfigError -> 2, DataError and
PipelineError -> 3, MetricError -> 4.
"""


class SlovbenchError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(SlovbenchError):
    """Invalid or inconsistent run configuration."""


class DataError(SlovbenchError):
    """Unreadable, malformed, or out-of-contract input data."""


class FormatError(DataError):
    """Binary or structured file does not match its declared format."""


class PipelineError(SlovbenchError):
    """I/O or worker failure inside a corpus-processing pipeline."""


class TrainingError(SlovbenchError):
    """Model training cannot proceed (degenerate corpus or labels)."""


class MetricError(SlovbenchError):
    """Metric preconditions violated (length mismatch, undefined value)."""
