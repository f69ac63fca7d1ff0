"""Query DTOs for the substitution application layer."""

from dataclasses import dataclass

from lattices.domain import GroupElement

from ...domain.models import SubstitutionDefinition


@dataclass(frozen=True)
class LoadDefinitionQuery:
    """Query to load a substitution definition by name or path.

    Attributes:
        name: A file path or the stem of a shipped definition.
    """

    name: str


@dataclass(frozen=True)
class LegalDictionaryQuery:
    """Query for the legal windows of a rule on one shape.

    Attributes:
        definition: The substitution definition.
        shape: The window shape; the backend's testing domain when empty.
    """

    definition: SubstitutionDefinition
    shape: tuple[GroupElement, ...] = ()


@dataclass(frozen=True)
class DictionaryComplexityQuery:
    """Query for legal patch counts on balls ``B(e, r)`` with ``r ≤ r_max``.

    Attributes:
        definition: The substitution definition.
        r_max: The largest integer radius.
    """

    definition: SubstitutionDefinition
    r_max: int = 3
