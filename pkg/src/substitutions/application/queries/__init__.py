from .dtos import DictionaryComplexityQuery, LegalDictionaryQuery, LoadDefinitionQuery
from .handlers import SubstitutionQueryHandler

__all__ = [
    "LoadDefinitionQuery",
    "LegalDictionaryQuery",
    "DictionaryComplexityQuery",
    "SubstitutionQueryHandler",
]
