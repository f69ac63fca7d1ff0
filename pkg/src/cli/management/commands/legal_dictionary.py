from substitutions.application import LegalDictionaryQuery
from substitutions.domain import ball_shape
from substitutions.interfaces import serialize_dictionary

from ..base import DefinitionCommand


class Command(DefinitionCommand):
    help = "Print the legal windows of the rule as sorted letter strings."

    def add_options(self, parser):
        parser.add_argument(
            "--ball",
            type=int,
            help="Use the ball B(e, R) instead of the testing domain",
        )

    def run(self, definition, **options):
        shape = ()
        if options["ball"] is not None:
            shape = ball_shape(definition.rule, options["ball"]).points
        dictionary = self.substitution_handler.handle_dictionary(
            LegalDictionaryQuery(definition, shape)
        )
        self.emit(serialize_dictionary(dictionary, definition.alphabet))
