from .events import ConvergenceCertified, DomainEvent
from .exceptions import (
    ConvergenceException,
    DivergentSeed,
    GraphTooLarge,
    SearchExhausted,
)
from .models import ConvergenceCertificate, RateReport, RateRow, SubstitutionGraph
from .services import (
    build_graph,
    certify,
    compute_n_t,
    measure_delta,
    rate_constant,
    rate_report,
    realised_legal_level,
    saturation_radius,
    seed_windows,
)
from .value_objects import Verdict

__all__ = [
    # Models
    "SubstitutionGraph",
    "ConvergenceCertificate",
    "RateRow",
    "RateReport",
    # Services
    "compute_n_t",
    "build_graph",
    "seed_windows",
    "certify",
    "realised_legal_level",
    "saturation_radius",
    "measure_delta",
    "rate_constant",
    "rate_report",
    # Exceptions
    "ConvergenceException",
    "SearchExhausted",
    "GraphTooLarge",
    "DivergentSeed",
    # Events
    "DomainEvent",
    "ConvergenceCertified",
    # Value Objects
    "Verdict",
]
