from testing_domains.application import (
    ReduceDomainCommand,
    TestingDomainCommandHandler,
)
from testing_domains.domain import DomainCertified, DomainReduced
from testing_domains.infrastructure import EventDispatcher
from testing_domains.interfaces import format_ledger, serialize_reduction

from ..base import DefinitionCommand


class Command(DefinitionCommand):
    help = (
        "Shrink the canonical testing domain of the definition's lattice, "
        "certifying every step."
    )

    def add_options(self, parser):
        parser.add_argument("--n0", type=int, default=1, help="Verification level")
        parser.add_argument(
            "--max-size", type=int, help="Fail unless the result is this small"
        )
        parser.add_argument(
            "--witnesses",
            action="store_true",
            help="Include every covering witness in the output",
        )

    def run(self, definition, **options):
        dispatcher = EventDispatcher()
        dispatcher.subscribe(DomainReduced, self.report_step)
        dispatcher.subscribe(DomainCertified, self.report_certified)
        handler = TestingDomainCommandHandler(dispatcher)

        result = handler.handle_reduce(
            ReduceDomainCommand(
                model=definition.model,
                n0=options["n0"],
                max_size=options["max_size"],
            )
        )

        self.stderr.write(format_ledger(result.ledger))
        self.emit(serialize_reduction(result, with_witnesses=options["witnesses"]))

    def report_step(self, event: DomainReduced) -> None:
        self.stderr.write(f"{event.previous_size} → {event.new_size} ({event.move})")

    def report_certified(self, event: DomainCertified) -> None:
        self.stderr.write(f"certified {event.size} points at N0={event.level}")
