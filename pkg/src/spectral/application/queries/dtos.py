"""Query DTOs for the spectral application layer."""

from dataclasses import dataclass

from substitutions.domain import SubstitutionDefinition


@dataclass(frozen=True)
class SpectrumQuery:
    """Query for the sampled spectrum of ``Sⁿ(ω₀)``.

    Attributes:
        definition: The substitution definition.
        seed: A declared seed name or ``const:<letter>``.
        level: The substitution level ``n``.
        grid: Phases per axis.
        operator: One of the standard operator names.
    """

    definition: SubstitutionDefinition
    seed: str
    level: int = 0
    grid: int = 16
    operator: str = "laplacian"


@dataclass(frozen=True)
class SpectralTableQuery:
    """Query for the spectral convergence table of a seed.

    Attributes:
        definition: The substitution definition.
        seed: A declared seed name or ``const:<letter>``.
        n_max: The largest substitution level.
        grid: Phases per axis.
        operator: One of the standard operator names.
        require_convergence: Refuse diverging seeds when true.
    """

    definition: SubstitutionDefinition
    seed: str
    n_max: int = 3
    grid: int = 16
    operator: str = "laplacian"
    require_convergence: bool = True
