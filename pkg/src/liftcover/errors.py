"""Shared exception types."""


class LiftCoverError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(LiftCoverError, ValueError):
    """Operands have incompatible dimensions or moduli."""


class NotSymplecticError(LiftCoverError, ValueError):
    """A matrix required to preserve the standard symplectic form does not."""


class MembershipError(LiftCoverError, ValueError):
    """A matrix fails a subgroup membership required by the operation."""


class WordSyntaxError(LiftCoverError, ValueError):
    """Word text failed to parse.

    ``position`` is the 0-based offset of the offending token in the input.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GeneratorRangeError(LiftCoverError, ValueError):
    """Generator index out of range for the ambient genus."""


class ConvergenceError(LiftCoverError, ArithmeticError):
    """An iteration failed to converge within its cap."""


class CapExceededError(LiftCoverError, RuntimeError):
    """A state cap was exceeded; ``visited`` carries the partial count."""

    def __init__(self, message, visited=None):
        super().__init__(message)
        self.visited = visited


class InternalCheckError(LiftCoverError, AssertionError):
    """A consistency check that should be unreachable failed."""
