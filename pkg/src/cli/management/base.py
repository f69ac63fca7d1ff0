"""Shared plumbing for the aperiodiq management commands.

Every command reads one substitution definition file and maps domain errors
onto stable exit codes.
"""

import json

from django.core.management.base import BaseCommand, CommandError

from convergence.domain import ConvergenceException, DivergentSeed
from lattices.domain import LatticeException
from spectral.domain import SpectralException, UnsupportedLattice
from substitutions.application import LoadDefinitionQuery, SubstitutionQueryHandler
from substitutions.domain import SubstitutionDefinition, SubstitutionException
from testing_domains.domain import TestingDomainException

EXIT_CONVERGES = 0
EXIT_DIVERGES = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3

HANDLED_ERRORS = (
    SubstitutionException,
    LatticeException,
    TestingDomainException,
    ConvergenceException,
    SpectralException,
    ValueError,
)


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, DivergentSeed):
        return EXIT_DIVERGES
    if isinstance(exc, UnsupportedLattice):
        return EXIT_UNSUPPORTED
    return EXIT_INPUT


class DefinitionCommand(BaseCommand):
    """A command whose first argument is a substitution definition file.

    Subclasses add their options in ``add_options`` and do their work in
    ``run``.
    """

    requires_system_checks = []

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.substitution_handler = SubstitutionQueryHandler()

    def add_arguments(self, parser):
        parser.add_argument(
            "file", help="Path or name of a .sub file in the definitions directory"
        )
        self.add_options(parser)

    def add_options(self, parser):
        pass

    def run(self, definition: SubstitutionDefinition, **options) -> None:
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            definition = self.substitution_handler.handle_load(
                LoadDefinitionQuery(options["file"])
            )
            self.run(definition, **options)
        except HANDLED_ERRORS as exc:
            raise CommandError(str(exc), returncode=exit_code_for(exc)) from exc

    def emit(self, data: dict) -> None:
        self.stdout.write(json.dumps(data, indent=2))
