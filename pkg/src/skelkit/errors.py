"""Exception types shared across skelkit."""

from __future__ import annotations


class SkelkitError(Exception):
    """Base class for every error raised by skelkit."""


class GraphParseError(SkelkitError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(SkelkitError):
    """The requested computation is beyond the supported (desk-scale) size."""


class ConflationError(SkelkitError, ValueError):
    """Two super-nodes were asked to conflate but do not qualify."""


class ConsistencyError(SkelkitError, AssertionError):
    """An internal invariant failed. Always a bug, never a user error."""
