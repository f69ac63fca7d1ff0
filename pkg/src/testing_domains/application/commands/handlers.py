"""Command handlers for the testing-domain application layer."""

from testing_domains.domain.events import DomainCertified, DomainReduced
from testing_domains.domain.exceptions import DomainSizeBoundError
from testing_domains.domain.models import DomainCertificate, ReductionResult
from testing_domains.domain.services import (
    canonical_domain,
    reduce_domain,
    verify_domain,
)
from testing_domains.infrastructure.event_dispatcher import EventDispatcher

from .dtos import ReduceDomainCommand, VerifyChainCommand


class TestingDomainCommandHandler:
    """Runs domain reductions and certificate chains.

    Attributes:
        event_dispatcher: The dispatcher for publishing domain events.
    """

    def __init__(self, event_dispatcher: EventDispatcher | None = None):
        self.event_dispatcher = event_dispatcher or EventDispatcher()

    def handle_reduce(self, command: ReduceDomainCommand) -> ReductionResult:
        """Reduce a testing domain.

        Publishes a DomainReduced event per accepted move and a
        DomainCertified event for the final domain.

        Raises:
            DomainSizeBoundError: If the result exceeds ``max_size``.
        """
        start = command.domain or canonical_domain(command.model).domain
        result = reduce_domain(command.model, start, command.n0)

        previous = len(result.initial)
        for step in result.steps:
            size = len(step.certificate.domain)
            self.event_dispatcher.publish(
                DomainReduced(previous_size=previous, new_size=size, move=step.move)
            )
            previous = size
        self.event_dispatcher.publish(
            DomainCertified(size=len(result.domain), level=command.n0)
        )

        if command.max_size is not None and len(result.domain) > command.max_size:
            raise DomainSizeBoundError(command.max_size, len(result.domain))
        return result

    def handle_verify_chain(
        self, command: VerifyChainCommand
    ) -> list[DomainCertificate]:
        """Certify every link of a chain.

        Raises:
            ValueError: If the chain has fewer than two domains.
            VerificationFailed: At the first link without a certificate.
        """
        if len(command.domains) < 2:
            raise ValueError("A certificate chain needs at least two domains")
        certificates = []
        for reference, candidate in zip(command.domains, command.domains[1:]):
            certificate = verify_domain(command.model, reference, candidate, command.n0)
            self.event_dispatcher.publish(
                DomainReduced(
                    previous_size=len(certificate.reference),
                    new_size=len(certificate.domain),
                    move="chain",
                )
            )
            certificates.append(certificate)
        self.event_dispatcher.publish(
            DomainCertified(size=len(certificates[-1].domain), level=command.n0)
        )
        return certificates
