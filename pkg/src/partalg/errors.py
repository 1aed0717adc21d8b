"""Exception types shared across the package."""


class PartalgError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(PartalgError, ValueError):
    """Operands live in algebras of different rank or parameter."""


class ParityError(PartalgError, ValueError):
    """A half-integer element violates its forced column block."""


class OrderError(PartalgError, ValueError):
    """A pair of set partitions is not comparable in the refinement order."""


class ParseError(PartalgError, ValueError):
    """Malformed serialized input.  ``position`` points at the offending character."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class BudgetExceeded(PartalgError):
    """A computation would exceed its configured size budget."""


class DomainError(PartalgError, ValueError):
    """Arguments outside the range where a formula is valid."""
