"""Shared exception types."""


class GraphFairError(Exception):
    """Base class for library errors."""


class CapExceeded(GraphFairError):
    """An exact search was asked to run beyond its configured size cap."""


class FileFormatError(GraphFairError):
    """Malformed graph / valuation / allocation file."""


class NonMonotoneError(GraphFairError):
    """A valuation violated monotonicity where the algorithm requires it."""


class InvariantViolation(GraphFairError):
    """An internal invariant that the theory guarantees was observed to fail.

    Raised with diagnostic state instead of silently producing output.
    """
