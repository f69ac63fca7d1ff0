from .queries import (
    DictionaryComplexityQuery,
    LegalDictionaryQuery,
    LoadDefinitionQuery,
    SubstitutionQueryHandler,
)

__all__ = [
    # Queries
    "LoadDefinitionQuery",
    "LegalDictionaryQuery",
    "DictionaryComplexityQuery",
    "SubstitutionQueryHandler",
]
