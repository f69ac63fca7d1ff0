"""Finite-range operators over configurations and their sampled spectra.

An operator acts on ``ℓ²(ℤᵈ)`` as
``(Hψ)(γ) = Σ_η t_η(γ)·ψ(γ+η) + v(γ)·ψ(γ)``, where each amplitude is either
a constant or read from a table keyed by the letters around ``γ``.
"""

import dataclasses
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from lattices.domain import LatticePointSet

from .exceptions import NonHermitianOperator, OperatorMismatch

Offset = tuple[int, ...]
Row = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class WindowTable:
    """A value decided by the letters on ``γ + W`` for a finite window ``W``.

    Attributes:
        shape: The window ``W``, relative to the cell.
        values: Value per window row, letters in shape order.
        default: Value for rows missing from ``values``; ``None`` makes a
            missing row an error.
    """

    shape: LatticePointSet
    values: Mapping[Row, complex] = field(default_factory=dict)
    default: complex | None = None

    def lookup(self, row: Row) -> complex:
        """Raises OperatorMismatch if the row has no entry and no default."""
        if row in self.values:
            return self.values[row]
        if self.default is None:
            raise OperatorMismatch(row)
        return self.default

    def lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        unique, inverse = np.unique(rows, axis=0, return_inverse=True)
        values = np.array(
            [self.lookup(tuple(row)) for row in unique.tolist()], dtype=complex
        )
        return values[inverse.reshape(-1)]

    @property
    def max_abs(self) -> float:
        candidates = [abs(v) for v in self.values.values()]
        if self.default is not None:
            candidates.append(abs(self.default))
        return max(candidates, default=0.0)


@dataclass(frozen=True, eq=False)
class OperatorSpec:
    """A strongly pattern-equivariant Schrödinger operator.

    Attributes:
        potentials: Potential per letter index.
        hops: Constant amplitudes ``t_η``.
        hop_tables: Window-decided amplitudes ``t_η(γ)``.
        onsite: Window-decided potential added to the letter potential.
        name: Label used in reports.
    """

    potentials: tuple[float, ...]
    hops: Mapping[Offset, complex] = field(default_factory=dict)
    hop_tables: Mapping[Offset, WindowTable] = field(default_factory=dict)
    onsite: WindowTable | None = None
    name: str = ""

    def __post_init__(self):
        offsets = set(self.hops) | set(self.hop_tables)
        for eta in offsets:
            if not any(eta):
                raise ValueError("Hop offsets must be nonzero; use potentials")
            back = tuple(-c for c in eta)
            if back not in offsets:
                raise ValueError(f"Hop set is not symmetric: {back} is missing")
            if eta in self.hops:
                if back not in self.hops:
                    raise ValueError(f"Hop {eta} is constant but {back} is not")
                deviation = abs(self.hops[eta] - np.conj(self.hops[back]))
                if deviation > 1e-12:
                    raise NonHermitianOperator(float(deviation))

    @property
    def offsets(self) -> list[Offset]:
        return sorted(set(self.hops) | set(self.hop_tables))

    def amplitude_bound(self, eta: Offset) -> float:
        if eta in self.hops:
            return float(abs(self.hops[eta]))
        return self.hop_tables[eta].max_abs

    def lipschitz_bound(self) -> float:
        """``L = Σ_η |t_η|_max·|η|₁``, bounding every band function's slope."""
        return sum(
            self.amplitude_bound(eta) * sum(abs(c) for c in eta)
            for eta in self.offsets
        )

    def norm_bound(self) -> float:
        bound = sum(self.amplitude_bound(eta) for eta in self.offsets)
        bound += max((abs(v) for v in self.potentials), default=0.0)
        if self.onsite is not None:
            bound += self.onsite.max_abs
        return bound

    def with_onsite(self, onsite: WindowTable, name: str = "") -> "OperatorSpec":
        return dataclasses.replace(self, onsite=onsite, name=name or self.name)


@dataclass(frozen=True, eq=False)
class SpectrumApprox:
    """Eigenvalues sampled on a uniform Bloch-phase grid.

    Attributes:
        samples: All eigenvalues, sorted.
        error_radius: The true spectrum is within this Hausdorff distance.
        grid: Phases per axis.
        dimension: Number of phase axes.
        band_matrix: Eigenvalues per phase, phases in lexicographic index
            order, one row each.
    """

    samples: np.ndarray = field(repr=False)
    error_radius: float
    grid: int = 1
    dimension: int = 1
    band_matrix: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if not np.all(np.isfinite(samples)):
            raise ValueError("Spectrum samples must be finite")
        if np.any(np.diff(samples) < 0):
            raise ValueError("Spectrum samples must be sorted")
        if self.error_radius < 0:
            raise ValueError("error_radius must be nonnegative")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return len(self.samples)

    def bands(self, tolerance: float | None = None) -> list[tuple[float, float]]:
        """Merge samples into intervals, closing gaps up to ``tolerance``.

        The default tolerance is ``2·error_radius``.
        """
        if not len(self.samples):
            return []
        if tolerance is None:
            tolerance = 2 * self.error_radius
        breaks = np.flatnonzero(np.diff(self.samples) > tolerance)
        starts = np.concatenate(([0], breaks + 1))
        ends = np.concatenate((breaks, [len(self.samples) - 1]))
        return [
            (float(self.samples[s]), float(self.samples[e]))
            for s, e in zip(starts, ends)
        ]


@dataclass(frozen=True)
class SpectralRow:
    """One level of a spectral convergence table.

    Attributes:
        n: The substitution level.
        size: Floquet matrix size at level ``n``.
        gap: ``d_H(σₙ, σₙ₊₁)`` of the samples; ``None`` on the last level.
        error_radius: Combined sampling error of the two spectra.
        bound: The dynamical bound ``C/λ₀ⁿ``, when the seed converges.
    """

    n: int
    size: int
    gap: float | None
    error_radius: float
    bound: float | None = None


@dataclass(frozen=True)
class SpectralTable:
    """Successive spectral gaps along ``Sⁿ(ω₀)``.

    Attributes:
        rows: One row per level.
        operator: Name of the operator.
        grid: Phases per axis.
        converges: Verdict of the seed.
        c_constant: The constant ``C`` of the dynamical bound.
    """

    rows: tuple[SpectralRow, ...]
    operator: str
    grid: int
    converges: bool
    c_constant: float | None = None

    def ratios(self) -> list[float | None]:
        """``gap(n+1)/gap(n)``; ``None`` where ``gap(n)`` vanishes."""
        gaps = [row.gap for row in self.rows if row.gap is not None]
        return [b / a if a else None for a, b in zip(gaps, gaps[1:])]
