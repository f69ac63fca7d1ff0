"""Domain exceptions for the lattice bounded context.

These exceptions signal malformed group elements, enumeration limits and
broken geometric invariants of a lattice backend.
"""


class LatticeException(Exception):
    """Base exception for all lattice domain errors."""

    pass


class DimensionMismatch(LatticeException):
    """Raised when a coordinate tuple has the wrong length for a backend.

    Attributes:
        expected: The dimension of the backend.
        actual: The length of the offending coordinate tuple.
    """

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected {expected} coordinates, got {actual}")


class InvalidGroupElement(LatticeException):
    """Raised when coordinates do not describe a lattice point.

    Attributes:
        coords: The rejected coordinates.
        reason: Why they were rejected.
    """

    def __init__(self, coords: tuple, reason: str):
        self.coords = coords
        self.reason = reason
        super().__init__(f"Invalid lattice point {coords}: {reason}")


class ResourceLimitExceeded(LatticeException):
    """Raised when an enumeration would exceed the configured point cap.

    Attributes:
        count: The number of points the enumeration would produce.
        cap: The configured cap.
    """

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"Enumeration of {count} points exceeds the cap of {cap} "
            "(raise APERIODIQ_POINT_CAP to allow it)"
        )


class InvariantViolation(LatticeException):
    """Raised when a backend constant fails a geometric check.

    This signals a bug in the backend rather than bad input.
    """

    def __init__(self, message: str):
        super().__init__(f"Lattice invariant violated: {message}")
