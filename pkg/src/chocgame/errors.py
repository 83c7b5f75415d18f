"""Shared exception types.

DomainError covers bad inputs (out-of-bounds cells, nonpositive sides),
CapacityError covers requests that exceed a configured resource bound.
The CLI maps them to exit codes 2 and 3 respectively.
"""


class DomainError(ValueError):
    """Input violates a precondition of the requested operation."""


class CapacityError(RuntimeError):
    """Request exceeds a configured size bound."""


class IllegalMoveError(DomainError):
    """Move is not legal in the given game state."""
