"""
Domain exceptions.

ValueError is used for bad arguments everywhere (the CLI maps it to a usage
error). The classes here signal problems that are not the caller's fault.
"""


class HodgekitError(Exception):
    """Base class for every hodgekit-specific failure."""


class ConsistencyError(HodgekitError):
    """
    Raised when two independent computation routes disagree, or when a computed
    object breaks one of its structural invariants. Always a bug, never bad input.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceededError(HodgekitError):
    """Raised when a symmetric-power computation would exceed the rank budget."""


class RingMismatchError(HodgekitError):
    """Raised when classes from two different Grassmann rings are combined."""
