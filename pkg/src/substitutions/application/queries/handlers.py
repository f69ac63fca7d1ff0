"""Query handlers for the substitution application layer."""

import math

from ...domain.models import SubstitutionDefinition
from ...domain.services import legal_dictionary, patch_count, testing_tuple
from ...domain.windows import LegalDictionary
from ...infrastructure.repositories import SubstitutionFileRepository
from .dtos import DictionaryComplexityQuery, LegalDictionaryQuery, LoadDefinitionQuery


class SubstitutionQueryHandler:
    """Handles read-only substitution queries.

    Attributes:
        repository: Where definitions are loaded from.
    """

    def __init__(self, repository: SubstitutionFileRepository | None = None):
        self.repository = repository or SubstitutionFileRepository()

    def handle_load(self, query: LoadDefinitionQuery) -> SubstitutionDefinition:
        """Load a definition.

        Raises:
            SubstitutionFileNotFound: If the file does not exist.
            InvalidSubstitutionFile: If it does not parse.
        """
        return self.repository.get(query.name)

    def handle_dictionary(self, query: LegalDictionaryQuery) -> LegalDictionary:
        """Compute the legal dictionary on the requested shape.

        Raises:
            NonPrimitiveRule: If the rule is not primitive.
        """
        rule = query.definition.rule
        shape = query.shape or testing_tuple(rule)[0].points
        return legal_dictionary(rule, shape)

    def handle_complexity(
        self, query: DictionaryComplexityQuery
    ) -> list[tuple[int, int, float | None]]:
        """Patch counts with their box-counting exponents, one row per radius.

        The exponent is ``None`` at ``r = 1`` where ``log r`` vanishes.
        """
        rows = []
        for r in range(1, query.r_max + 1):
            count = patch_count(query.definition.rule, r)
            exponent = math.log(count) / math.log(r) if r > 1 else None
            rows.append((r, count, exponent))
        return rows
