from .dtos import CertifySeedQuery, ComputeStepQuery, RateReportQuery
from .handlers import ConvergenceQueryHandler

__all__ = [
    "CertifySeedQuery",
    "RateReportQuery",
    "ComputeStepQuery",
    "ConvergenceQueryHandler",
]
