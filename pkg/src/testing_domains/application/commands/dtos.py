"""Command DTOs for the testing-domain application layer."""

from dataclasses import dataclass

from lattices.domain import GroupElement, LatticeModel


@dataclass(frozen=True)
class ReduceDomainCommand:
    """Command to reduce a testing domain greedily.

    Attributes:
        model: The lattice backend.
        domain: Starting domain; the canonical domain when empty.
        n0: The level ``N₀`` of every verification.
        max_size: Fail unless the reduced domain has at most this many points.
    """

    model: LatticeModel
    domain: tuple[GroupElement, ...] = ()
    n0: int = 1
    max_size: int | None = None


@dataclass(frozen=True)
class VerifyChainCommand:
    """Command to certify a chain ``T₀ → T₁ → …`` link by link.

    Attributes:
        model: The lattice backend.
        domains: The chain, starting with a verified testing domain.
        n0: The level ``N₀`` of every link.
    """

    model: LatticeModel
    domains: tuple[tuple[GroupElement, ...], ...]
    n0: int = 1
