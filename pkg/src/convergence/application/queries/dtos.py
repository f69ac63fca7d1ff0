"""Query DTOs for the convergence application layer."""

from dataclasses import dataclass

from lattices.domain import GroupElement, LatticeModel
from substitutions.domain import SubstitutionDefinition


@dataclass(frozen=True)
class CertifySeedQuery:
    """Query to certify convergence of one seed of a definition.

    Attributes:
        definition: The substitution definition.
        seed: A declared seed name or ``const:<letter>``.
        shape: Testing domain for the graph; the rule's testing tuple when empty.
        step: The step ``N_T``; computed when omitted.
    """

    definition: SubstitutionDefinition
    seed: str
    shape: tuple[GroupElement, ...] = ()
    step: int | None = None


@dataclass(frozen=True)
class RateReportQuery:
    """Query to measure convergence rates of a seed.

    Attributes:
        definition: The substitution definition.
        seed: A declared seed name or ``const:<letter>``.
        n_max: The largest substitution level.
        r_max: The largest ball radius compared.
        lin_rep_radius: Largest radius scanned for the repetitivity bound.
    """

    definition: SubstitutionDefinition
    seed: str
    n_max: int = 5
    r_max: int = 4
    lin_rep_radius: int = 1


@dataclass(frozen=True)
class ComputeStepQuery:
    """Query for the least self-covering step ``N_T`` of a shape.

    Attributes:
        model: The lattice backend.
        shape: The testing domain.
    """

    model: LatticeModel
    shape: tuple[GroupElement, ...]
