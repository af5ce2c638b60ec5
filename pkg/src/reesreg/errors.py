"""Shared exception types."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when an edge-list file or string cannot be parsed."""


class InstanceTooLargeError(ValueError):
    """Raised by enumeration guards when an input exceeds desk scale."""


class NoOddCycleError(ValueError):
    """Raised when a half-space system is requested for a bipartite graph."""


class InternalInvariantError(RuntimeError):
    """Raised when a should-not-happen condition is detected.

    Examples: an implicit equality among the constructed half-spaces, or the
    dilation search running past its proven bound.  Either one signals a bug,
    not a bad input.
    """
