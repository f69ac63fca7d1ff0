"""Domain exceptions for the spectral bounded context."""


class SpectralException(Exception):
    """Base exception for all spectral errors."""

    pass


class UnsupportedLattice(SpectralException):
    """Raised when Floquet theory is asked for on a non-abelian lattice.

    Attributes:
        kind: The lattice backend identifier.
    """

    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"Floquet-Bloch spectra need a zd-block lattice, got {kind}")


class OperatorMismatch(SpectralException):
    """Raised when a decision table has no entry for an occurring window.

    Attributes:
        window: The window values that were looked up.
    """

    def __init__(self, window: tuple[int, ...]):
        self.window = window
        super().__init__(f"Operator table has no entry for window {window}")


class NonHermitianOperator(SpectralException):
    """Raised when hop amplitudes violate the self-adjointness constraint.

    Attributes:
        deviation: The largest entry of ``H - H*``.
    """

    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"Operator is not self-adjoint (deviation {deviation:.3g})")


class SpectralComputationError(SpectralException):
    """Raised when the dense eigensolver fails.

    Attributes:
        theta: The Bloch phase.
        matrix: The Floquet matrix that failed.
    """

    def __init__(self, theta: tuple[float, ...], matrix):
        self.theta = theta
        self.matrix = matrix
        super().__init__(
            f"Eigensolver did not converge at theta={theta} "
            f"for a {len(matrix)}x{len(matrix)} matrix"
        )


class MatrixTooLarge(SpectralException):
    """Raised when a Floquet matrix would exceed the size cap.

    Attributes:
        size: The requested matrix size.
        cap: The configured cap.
        largest_feasible_level: Highest substitution level within the cap,
            when known.
    """

    def __init__(self, size: int, cap: int, largest_feasible_level: int | None = None):
        self.size = size
        self.cap = cap
        self.largest_feasible_level = largest_feasible_level
        message = f"Floquet matrix of size {size} exceeds the cap of {cap}"
        if largest_feasible_level is not None:
            message += f"; largest feasible level is {largest_feasible_level}"
        super().__init__(message)


class EmptySpectrum(SpectralException):
    """Raised when a Hausdorff distance is asked for an empty sample set."""

    def __init__(self):
        super().__init__("Hausdorff distance needs two nonempty sample sets")


class UnknownOperator(SpectralException):
    """Raised when an operator name is not recognised.

    Attributes:
        name: The requested name.
        available: The known operator names.
    """

    def __init__(self, name: str, available: list[str]):
        self.name = name
        self.available = available
        super().__init__(
            f"Unknown operator '{name}'; choose one of {', '.join(available)}"
        )
