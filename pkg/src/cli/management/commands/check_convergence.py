from convergence.application import CertifySeedQuery, ConvergenceQueryHandler
from convergence.domain import ConvergenceCertified, DivergentSeed
from convergence.infrastructure import EventDispatcher
from convergence.interfaces import serialize_certificate

from ..base import DefinitionCommand


class Command(DefinitionCommand):
    help = (
        "Decide whether S^n(seed) converges to the subshift. Exits 0 when it "
        "does and 1 with a closed path of illegal windows when it does not."
    )

    def add_options(self, parser):
        parser.add_argument("seed", help="Declared seed name or const:<letter>")
        parser.add_argument(
            "--step", type=int, help="Substitution step N_T of the graph"
        )

    def run(self, definition, **options):
        dispatcher = EventDispatcher()
        dispatcher.subscribe(ConvergenceCertified, self.report_verdict)
        handler = ConvergenceQueryHandler(dispatcher)

        certificate = handler.handle_certify(
            CertifySeedQuery(definition, options["seed"], step=options["step"])
        )

        self.emit(serialize_certificate(certificate, definition.alphabet))
        if not certificate.converges:
            raise DivergentSeed(certificate)

    def report_verdict(self, event: ConvergenceCertified) -> None:
        self.stderr.write(f"{event.seed}: {event.verdict}")
