from .queries import (
    CertifySeedQuery,
    ComputeStepQuery,
    ConvergenceQueryHandler,
    RateReportQuery,
)

__all__ = [
    # Queries
    "CertifySeedQuery",
    "RateReportQuery",
    "ComputeStepQuery",
    "ConvergenceQueryHandler",
]
