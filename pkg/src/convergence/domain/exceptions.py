"""Domain exceptions for the convergence bounded context."""


class ConvergenceException(Exception):
    """Base exception for all convergence errors."""

    pass


class SearchExhausted(ConvergenceException):
    """Raised when no self-covering step ``N_T`` is found.

    Attributes:
        m_max: The largest step that was tried.
    """

    def __init__(self, m_max: int):
        self.m_max = m_max
        super().__init__(f"No step m <= {m_max} makes the shape cover itself")


class GraphTooLarge(ConvergenceException):
    """Raised when a substitution graph is too large to list in full.

    Attributes:
        count: The number of vertices ``|𝒜|^|T|``.
        cap: The configured cap.
    """

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"Substitution graph has {count} vertices, more than the cap of {cap}"
        )


class DivergentSeed(ConvergenceException):
    """Raised when an operation needs a converging seed.

    Attributes:
        certificate: The diverging certificate.
    """

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(
            f"Seed windows reach a closed path of {len(certificate.cycle) - 1} "
            "illegal windows"
        )
