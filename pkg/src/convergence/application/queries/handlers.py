"""Query handlers for the convergence application layer."""

from convergence.domain.events import ConvergenceCertified
from convergence.domain.exceptions import DivergentSeed
from convergence.domain.models import ConvergenceCertificate, RateReport
from convergence.domain.services import build_graph, certify, compute_n_t, rate_report
from convergence.infrastructure import EventDispatcher

from .dtos import CertifySeedQuery, ComputeStepQuery, RateReportQuery


class ConvergenceQueryHandler:
    """Certifies seeds and measures their convergence rates.

    Attributes:
        event_dispatcher: The dispatcher for publishing domain events.
    """

    def __init__(self, event_dispatcher: EventDispatcher | None = None):
        self.event_dispatcher = event_dispatcher or EventDispatcher()

    def handle_certify(self, query: CertifySeedQuery) -> ConvergenceCertificate:
        """Run the graph test for a seed.

        Publishes a ConvergenceCertified event with the verdict.

        Raises:
            UnknownSeed: If the seed is not declared.
            NonPrimitiveRule: If the rule is not primitive.
        """
        definition = query.definition
        seed = definition.seed(query.seed)
        graph = build_graph(definition.rule, query.shape or None, query.step)
        certificate = certify(graph, seed)
        self.event_dispatcher.publish(
            ConvergenceCertified(seed=query.seed, verdict=certificate.verdict.value)
        )
        return certificate

    def handle_rate(self, query: RateReportQuery) -> RateReport:
        """Measure the rate of a converging seed.

        Raises:
            DivergentSeed: If the seed diverges.
        """
        certificate = self.handle_certify(
            CertifySeedQuery(query.definition, query.seed)
        )
        if not certificate.converges:
            raise DivergentSeed(certificate)
        return rate_report(
            query.definition.rule,
            query.definition.seed(query.seed),
            query.n_max,
            query.r_max,
            certificate=certificate,
            lin_rep_radius=query.lin_rep_radius,
        )

    def handle_step(self, query: ComputeStepQuery) -> int:
        """Compute ``N_T``.

        Raises:
            SearchExhausted: If no step up to ``M_MAX`` works.
        """
        return compute_n_t(query.model, query.shape)
