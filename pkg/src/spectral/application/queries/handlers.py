"""Query handlers for the spectral application layer."""

from spectral.domain.models import SpectralTable, SpectrumApprox
from spectral.domain.services import (
    named_operator,
    require_block_lattice,
    spectral_convergence_table,
    spectrum,
)
from substitutions.domain import substitute_periodic

from .dtos import SpectralTableQuery, SpectrumQuery


class SpectralQueryHandler:
    """Computes spectra of substituted seeds.

    Attributes:
        workers: Thread count for eigensolves, the configured default if None.
    """

    def __init__(self, workers: int | None = None):
        self.workers = workers

    def handle_spectrum(self, query: SpectrumQuery) -> SpectrumApprox:
        """Raises UnsupportedLattice for non-abelian lattices."""
        definition = query.definition
        require_block_lattice(definition.model)
        spec = named_operator(query.operator, definition.rule, definition.alphabet)
        config = substitute_periodic(
            definition.rule, definition.seed(query.seed), query.level
        )
        return spectrum(spec, config, query.grid, self.workers)

    def handle_table(self, query: SpectralTableQuery) -> SpectralTable:
        """Raises DivergentSeed when convergence is required and fails."""
        definition = query.definition
        require_block_lattice(definition.model)
        spec = named_operator(query.operator, definition.rule, definition.alphabet)
        return spectral_convergence_table(
            definition.rule,
            spec,
            definition.seed(query.seed),
            query.n_max,
            query.grid,
            require_convergence=query.require_convergence,
            workers=self.workers,
        )
