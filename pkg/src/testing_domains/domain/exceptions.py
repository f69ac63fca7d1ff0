"""Domain exceptions for the testing-domain bounded context."""

from lattices.domain import GroupElement


class TestingDomainException(Exception):
    """Base exception for all testing-domain errors."""

    pass


class VerificationFailed(TestingDomainException):
    """Raised when the covering check finds no witness for some transversal points.

    Attributes:
        offending: The transversal points ``x`` without a witness ``γ_x``.
        level: The level ``N₀`` the verification ran at.
    """

    def __init__(self, offending: list[GroupElement], level: int):
        self.offending = offending
        self.level = level
        shown = ", ".join(str(x) for x in offending[:5])
        more = f" and {len(offending) - 5} more" if len(offending) > 5 else ""
        super().__init__(
            f"No covering witness at level {level} for x = {shown}{more}"
        )


class NoSufficiencyWitness(TestingDomainException):
    """Raised when no ball ``B(z, r) ⊆ V(s)`` is found within the search bound.

    Attributes:
        max_shift: The largest shift ``s`` that was tried.
    """

    def __init__(self, max_shift: int):
        self.max_shift = max_shift
        super().__init__(f"No sufficiency witness found for s <= {max_shift}")


class DomainSizeBoundError(TestingDomainException):
    """Raised when the reduced domain is still larger than a requested bound.

    Attributes:
        max_size: The requested upper bound.
        smallest: The size of the smallest domain that was certified.
    """

    def __init__(self, max_size: int, smallest: int):
        self.max_size = max_size
        self.smallest = smallest
        super().__init__(
            f"Smallest certified domain has {smallest} points, "
            f"more than the requested {max_size}"
        )
