"""Exception types shared across the package."""


class LaneLearnError(Exception):
    """Base class for all package-level errors."""


class FormatError(LaneLearnError):
    """Malformed file content. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VersionError(LaneLearnError):
    """File declares a schema version this code does not understand."""


class ShapeMismatch(LaneLearnError):
    """Input vector length does not match the network definition."""


class NonFiniteLoss(LaneLearnError):
    """A loss value or gradient became NaN/inf. Carries the batch index when known."""

    def __init__(self, message: str, batch_index: int | None = None):
        self.batch_index = batch_index
        if batch_index is not None:
            message = f"batch {batch_index}: {message}"
        super().__init__(message)


class NoPositiveData(LaneLearnError):
    """Metric needs at least one sample with positive feedback."""


class EmptyBatch(LaneLearnError):
    """Operation requires a nonempty collection of corrections."""


class AlignmentGap(LaneLearnError):
    """A correction stream left log entries uncovered (strict alignment only)."""


class SimDiverged(LaneLearnError):
    """A scripted policy left the road; gains or geometry are misconfigured."""
