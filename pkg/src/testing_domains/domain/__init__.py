from .events import DomainCertified, DomainEvent, DomainReduced
from .exceptions import (
    DomainSizeBoundError,
    NoSufficiencyWitness,
    TestingDomainException,
    VerificationFailed,
)
from .models import (
    CanonicalDomain,
    DomainCertificate,
    ReductionResult,
    ReductionStep,
    SufficiencyWitness,
)
from .services import (
    canonical_domain,
    covering_witnesses,
    reduce_domain,
    sufficiency_witness,
    verify_domain,
)

__all__ = [
    # Models
    "CanonicalDomain",
    "DomainCertificate",
    "ReductionResult",
    "ReductionStep",
    "SufficiencyWitness",
    # Services
    "canonical_domain",
    "covering_witnesses",
    "reduce_domain",
    "sufficiency_witness",
    "verify_domain",
    # Exceptions
    "TestingDomainException",
    "VerificationFailed",
    "NoSufficiencyWitness",
    "DomainSizeBoundError",
    # Events
    "DomainEvent",
    "DomainReduced",
    "DomainCertified",
]
