from .definition_format import dumps, loads
from .repositories import SubstitutionFileRepository

__all__ = [
    "SubstitutionFileRepository",
    "dumps",
    "loads",
]
