"""Exception types shared across the package."""


class TopologyError(ValueError):
    """Malformed topology input or topology text."""


class ScheduleFormatError(ValueError):
    """Malformed schedule text."""


class CoverageError(RuntimeError):
    """A scheduler failed to cover every reachable node (should not happen)."""


class InstanceTooLargeError(ValueError):
    """Exhaustive optimum requested for an instance beyond the size guard."""


class VerificationError(RuntimeError):
    """A schedule failed strict verification."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
