from .exceptions import (
    DimensionMismatch,
    InvalidGroupElement,
    InvariantViolation,
    LatticeException,
    ResourceLimitExceeded,
)
from .models import HeisenbergLattice, LatticeModel, ZdBlockLattice, build_lattice
from .value_objects import Comparison, GroupElement, LatticePointSet

__all__ = [
    # Models
    "LatticeModel",
    "ZdBlockLattice",
    "HeisenbergLattice",
    "build_lattice",
    # Exceptions
    "LatticeException",
    "DimensionMismatch",
    "InvalidGroupElement",
    "InvariantViolation",
    "ResourceLimitExceeded",
    # Value Objects
    "Comparison",
    "GroupElement",
    "LatticePointSet",
]
