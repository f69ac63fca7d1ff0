from .exceptions import (
    EmptySpectrum,
    MatrixTooLarge,
    NonHermitianOperator,
    OperatorMismatch,
    SpectralComputationError,
    SpectralException,
    UnknownOperator,
    UnsupportedLattice,
)
from .models import (
    OperatorSpec,
    SpectralRow,
    SpectralTable,
    SpectrumApprox,
    WindowTable,
)
from .services import (
    OPERATORS,
    finite_volume_spectrum,
    floquet_matrix,
    hausdorff_1d,
    laplacian,
    named_operator,
    periodic_block,
    phase_grid,
    potential_operator,
    require_block_lattice,
    spectral_convergence_table,
    spectrum,
    witness_operator,
)

__all__ = [
    # Models
    "WindowTable",
    "OperatorSpec",
    "SpectrumApprox",
    "SpectralRow",
    "SpectralTable",
    # Services
    "OPERATORS",
    "require_block_lattice",
    "periodic_block",
    "floquet_matrix",
    "phase_grid",
    "spectrum",
    "hausdorff_1d",
    "finite_volume_spectrum",
    "laplacian",
    "potential_operator",
    "witness_operator",
    "named_operator",
    "spectral_convergence_table",
    # Exceptions
    "SpectralException",
    "UnsupportedLattice",
    "OperatorMismatch",
    "NonHermitianOperator",
    "SpectralComputationError",
    "MatrixTooLarge",
    "EmptySpectrum",
    "UnknownOperator",
]
