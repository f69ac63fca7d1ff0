"""Serializers for the testing-domain bounded context.

Domains are emitted as sorted coordinate lists, rationals as strings.
"""

from lattices.domain import LatticePointSet
from testing_domains.domain.models import (
    CanonicalDomain,
    DomainCertificate,
    ReductionResult,
)

FORMAT_VERSION = 1


def serialize_domain(domain: LatticePointSet) -> dict:
    return {"size": len(domain), "points": domain.as_lists()}


def serialize_canonical_domain(canonical: CanonicalDomain) -> dict:
    return {
        "format": FORMAT_VERSION,
        "domain": serialize_domain(canonical.domain),
        "c_t": str(canonical.c_t),
        "s1": canonical.s1,
        "s2": canonical.s2,
        "delta": str(canonical.delta),
        "source": canonical.source,
    }


def serialize_certificate(certificate: DomainCertificate) -> dict:
    """Serialize a certificate with its witnesses ``γ_x`` sorted by ``x``."""
    return {
        "reference_size": len(certificate.reference),
        "domain": serialize_domain(certificate.domain),
        "n0": certificate.level,
        "witnesses": [
            {"x": list(x), "gamma": list(gamma)}
            for x, gamma in sorted(certificate.witnesses.items())
        ],
    }


def format_ledger(sizes: list[int]) -> str:
    """Render a size ledger such as ``256 → 52 → 28``."""
    return " → ".join(str(size) for size in sizes)


def serialize_reduction(result: ReductionResult, with_witnesses: bool = False) -> dict:
    """Serialize a reduction with its size ledger and certificate chain.

    Args:
        result: The reduction result.
        with_witnesses: Whether to include every ``γ_x`` of every step.
    """
    steps = []
    for step in result.steps:
        entry = {"move": step.move, "size": len(step.certificate.domain)}
        if with_witnesses:
            entry["certificate"] = serialize_certificate(step.certificate)
        steps.append(entry)
    return {
        "format": FORMAT_VERSION,
        "reference": serialize_domain(result.initial),
        "domain": serialize_domain(result.domain),
        "ledger": format_ledger(result.ledger),
        "steps": steps,
    }
