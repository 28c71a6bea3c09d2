"""Exception hierarchy shared across the package."""


class BesselNeumannError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BesselNeumannError):
    """Malformed expression text. Carries the 0-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(BesselNeumannError):
    """A function was evaluated outside its analytic / real domain."""


class NumericalError(BesselNeumannError):
    """Numerical failure: singular Krylov matrix, overflow in the matrix
    exponential, or a non-convergent tail sum."""
