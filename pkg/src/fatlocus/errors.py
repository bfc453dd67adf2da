"""Shared exception types."""


class FatlocusError(Exception):
    """Base class for all library errors."""


class NoSuchRootError(FatlocusError):
    """Requested root of unity does not exist in the field."""


class NotSquareError(FatlocusError):
    """The (N, d, m) bookkeeping does not admit a square interpolation matrix."""


class DimensionMismatchError(FatlocusError):
    """Coordinate arity does not match the ambient dimension."""


class SizeMismatchError(FatlocusError):
    """Point count incompatible with the requested certificate scheme."""


class BudgetExceededError(FatlocusError):
    """Symbolic expansion would exceed the configured budget."""


class ZeroPolynomialError(FatlocusError):
    """Operation undefined for the zero polynomial."""


class EmptySystemError(FatlocusError):
    """The linear system contains no nonzero form."""


class NotUniqueError(FatlocusError):
    """The linear system contains more than one independent form."""

    def __init__(self, dim: int):
        super().__init__(f"system dimension is {dim}, not 1")
        self.dim = dim


class DuplicateLineError(FatlocusError):
    """A line arrangement contains two proportional coefficient vectors."""


class DuplicatePointError(FatlocusError):
    """A configuration contains two equal points after normalization."""


class ValidationFailedError(FatlocusError):
    """A configuration failed its combinatorial validator."""


class ParseError(FatlocusError):
    """A configuration or certificate file is malformed."""
