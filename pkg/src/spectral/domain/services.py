"""Floquet-Bloch spectra of periodic configurations on ``ℤᵈ``.

A configuration with period vector ``p`` reduces the operator to the
Hermitian matrices ``H(θ)`` on the ``∏ p`` cells of one period. The union of
their eigenvalues over all phases is the spectrum; a uniform phase grid
samples it, with the sampling error controlled by the band functions'
Lipschitz constant.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

import numpy as np
from scipy import linalg

from convergence.domain import (
    ConvergenceCertificate,
    DivergentSeed,
    build_graph,
    certify,
    rate_constant,
)
from core.conf import aperiodiq_setting
from lattices.domain import GroupElement, LatticeModel, ZdBlockLattice
from substitutions.domain import (
    Alphabet,
    BlockPeriodicConfig,
    ConstantConfig,
    PeriodicConfig,
    SubstitutionRule,
    legal_dictionary,
    lin_rep_lower_bound,
    substitute_periodic,
    testing_tuple,
)

from .exceptions import (
    EmptySpectrum,
    MatrixTooLarge,
    NonHermitianOperator,
    SpectralComputationError,
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

logger = logging.getLogger(__name__)

HERMITIAN_TOLERANCE = 1e-9


def require_block_lattice(model: LatticeModel) -> ZdBlockLattice:
    """Raises UnsupportedLattice for backends without abelian Floquet theory."""
    if not isinstance(model, ZdBlockLattice):
        raise UnsupportedLattice(model.kind)
    return model


def periodic_block(config: PeriodicConfig) -> np.ndarray:
    """The letter block of one period, ``block[γ mod p]`` at ``γ``."""
    model = require_block_lattice(config.model)
    if isinstance(config, ConstantConfig):
        return np.full((1,) * model.dimension, config.letter, dtype=np.uint8)
    if isinstance(config, BlockPeriodicConfig):
        return config.block
    raise UnsupportedLattice(model.kind)


def _cell_windows(block: np.ndarray, shape: Iterable[GroupElement]) -> np.ndarray:
    """Window rows at every cell of the block, cells in C order."""
    axes = tuple(range(block.ndim))
    columns = [
        np.roll(block, shift=tuple(-c for c in s), axis=axes).reshape(-1)
        for s in shape
    ]
    return np.stack(columns, axis=1)


def _amplitudes(
    spec: OperatorSpec, eta: tuple[int, ...], block: np.ndarray
) -> np.ndarray:
    if eta in spec.hops:
        return np.full(block.size, spec.hops[eta], dtype=complex)
    table = spec.hop_tables[eta]
    return table.lookup_rows(_cell_windows(block, table.shape))


class _BlochAssembly:
    """The θ-independent parts of ``H(θ)``: diagonal, hop targets and wraps."""

    def __init__(
        self, spec: OperatorSpec, config: PeriodicConfig, matrix_cap: int | None
    ):
        block = periodic_block(config)
        cap = matrix_cap or int(aperiodiq_setting("MATRIX_CAP"))
        if block.size > cap:
            raise MatrixTooLarge(block.size, cap)
        self.size = block.size
        self.dimension = block.ndim
        self.tolerance = HERMITIAN_TOLERANCE * max(1.0, spec.norm_bound())
        period = np.array(block.shape)
        cells = np.indices(block.shape).reshape(block.ndim, -1).T

        letters = block.reshape(-1)
        diagonal = np.asarray(spec.potentials, dtype=float)[letters].astype(complex)
        if spec.onsite is not None:
            windows = _cell_windows(block, spec.onsite.shape)
            diagonal += spec.onsite.lookup_rows(windows)
        self.diagonal = diagonal

        self.hops = []
        for eta in spec.offsets:
            targets = cells + np.array(eta)
            wraps = np.floor_divide(targets, period)
            target = np.ravel_multi_index(
                tuple(np.mod(targets, period).T), block.shape
            )
            self.hops.append((target, wraps, _amplitudes(spec, eta, block)))

    def matrix(self, theta: Iterable[float]) -> np.ndarray:
        theta = np.asarray(tuple(theta), dtype=float)
        matrix = np.diag(self.diagonal)
        source = np.arange(self.size)
        for target, wraps, amplitudes in self.hops:
            phases = np.exp(1j * (wraps @ theta))
            np.add.at(matrix, (source, target), amplitudes * phases)
        deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
        if deviation > self.tolerance:
            raise NonHermitianOperator(deviation)
        return matrix


def floquet_matrix(
    spec: OperatorSpec,
    config: PeriodicConfig,
    theta: Iterable[float],
    matrix_cap: int | None = None,
) -> np.ndarray:
    """The Bloch matrix ``H(θ)`` of the operator on one period.

    Cells are indexed in C order of the period block. A hop from ``u`` to
    ``u + η`` lands on ``(u + η) mod p`` with phase ``exp(i θ·w)``, ``w`` the
    integer wrap count.

    Raises:
        UnsupportedLattice: If the configuration is not on ``ℤᵈ``.
        MatrixTooLarge: If the period has more cells than the cap.
        OperatorMismatch: If a decision table misses an occurring window.
        NonHermitianOperator: If the amplitudes are not self-adjoint.
    """
    return _BlochAssembly(spec, config, matrix_cap).matrix(theta)


def _eigenvalues(matrix: np.ndarray, theta: tuple[float, ...]) -> np.ndarray:
    try:
        return linalg.eigvalsh(matrix)
    except linalg.LinAlgError:
        raise SpectralComputationError(theta, matrix) from None


def phase_grid(dimension: int, grid: int) -> list[tuple[float, ...]]:
    """The phases ``2πk/grid``, ``k ∈ {0,…,grid-1}ᵈ`` in lexicographic order."""
    step = 2 * math.pi / grid
    return [
        tuple(k * step for k in index)
        for index in itertools.product(range(grid), repeat=dimension)
    ]


def spectrum(
    spec: OperatorSpec,
    config: PeriodicConfig,
    grid: int,
    workers: int | None = None,
    matrix_cap: int | None = None,
) -> SpectrumApprox:
    """Eigenvalues of ``H(θ)`` over a uniform phase grid.

    ``error_radius = L·h/2`` with ``h = 2π/grid`` and ``L`` the operator's
    Lipschitz bound. Eigensolves run on a thread pool; the result does not
    depend on the worker count.

    Raises:
        ValueError: If ``grid < 1``.
        SpectralComputationError: If an eigensolve fails.
    """
    if grid < 1:
        raise ValueError(f"Phase grid needs at least one point per axis, got {grid}")
    assembly = _BlochAssembly(spec, config, matrix_cap)
    phases = phase_grid(assembly.dimension, grid)
    workers = workers or int(aperiodiq_setting("WORKERS"))

    def solve(theta: tuple[float, ...]) -> np.ndarray:
        return _eigenvalues(assembly.matrix(theta), theta)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        bands = np.array(list(pool.map(solve, phases)))
    logger.debug(
        "Solved %d Floquet matrices of size %d with %d workers",
        len(phases),
        assembly.size,
        workers,
    )
    error_radius = spec.lipschitz_bound() * math.pi / grid
    samples = np.sort(bands.reshape(-1))
    return SpectrumApprox(samples, error_radius, grid, assembly.dimension, bands)


def hausdorff_1d(a: SpectrumApprox, b: SpectrumApprox) -> float:
    """Exact Hausdorff distance between two sorted sample sets.

    Raises:
        EmptySpectrum: If either set is empty.
    """
    if not len(a) or not len(b):
        raise EmptySpectrum()
    return max(_directed(a.samples, b.samples), _directed(b.samples, a.samples))


def _directed(source: np.ndarray, target: np.ndarray) -> float:
    """``sup_{x∈source} dist(x, target)`` for sorted ``target``."""
    right = np.clip(np.searchsorted(target, source), 0, len(target) - 1)
    left = np.clip(right - 1, 0, len(target) - 1)
    nearest = np.minimum(np.abs(source - target[left]), np.abs(source - target[right]))
    return float(nearest.max())


def finite_volume_spectrum(
    spec: OperatorSpec, config: PeriodicConfig, repeats: tuple[int, ...]
) -> np.ndarray:
    """Sorted eigenvalues on a box of ``repeats`` periods with periodic boundary.

    For ``repeats = (g,)*d`` they coincide with the samples of
    ``spectrum(spec, config, g)``.
    """
    block = periodic_block(config)
    box = BlockPeriodicConfig(config.model, np.tile(block, repeats))
    theta = (0.0,) * block.ndim
    return np.sort(_eigenvalues(floquet_matrix(spec, box, theta), theta))


def laplacian(
    dimension: int, potentials: Iterable[float], hopping: float = 1.0
) -> OperatorSpec:
    """Nearest-neighbour hopping ``hopping`` plus letter potentials."""
    hops = {}
    for axis in range(dimension):
        for sign in (1, -1):
            eta = tuple(sign if j == axis else 0 for j in range(dimension))
            hops[eta] = complex(hopping)
    return OperatorSpec(tuple(potentials), hops, name="laplacian")


def potential_operator(potentials: Iterable[float]) -> OperatorSpec:
    return OperatorSpec(tuple(potentials), name="potential")


def witness_operator(
    rule: SubstitutionRule,
    base: OperatorSpec,
    shape: Iterable[GroupElement] | None = None,
    coupling: float | None = None,
) -> OperatorSpec:
    """Add a potential bump on every cell whose ``T``-window is illegal.

    The bump is ``coupling·max(‖H‖, 1)`` with ``‖H‖`` the base operator's
    norm bound; ``T`` defaults to the rule's testing domain.
    """
    if shape is None:
        shape, _ = testing_tuple(rule)
    dictionary = legal_dictionary(rule, shape)
    if coupling is None:
        coupling = aperiodiq_setting("WITNESS_COUPLING")
    bump = float(coupling) * max(base.norm_bound(), 1.0)
    table = WindowTable(
        dictionary.shape, {row: 0.0 for row in dictionary.rows}, default=bump
    )
    return base.with_onsite(table, name="witness")


OPERATORS = ("laplacian", "free", "potential", "witness")


def named_operator(
    name: str, rule: SubstitutionRule, alphabet: Alphabet
) -> OperatorSpec:
    """Build one of the standard operators for a definition.

    Raises:
        UnknownOperator: If the name is not in ``OPERATORS``.
    """
    dimension = require_block_lattice(rule.model).dimension
    potentials = [alphabet.potential(i) for i in range(len(alphabet))]
    if name == "laplacian":
        return laplacian(dimension, potentials)
    if name == "free":
        return OperatorSpec(
            (0.0,) * len(alphabet), laplacian(dimension, ()).hops, name="free"
        )
    if name == "potential":
        return potential_operator(potentials)
    if name == "witness":
        return witness_operator(rule, laplacian(dimension, potentials))
    raise UnknownOperator(name, list(OPERATORS))


def _feasible_level(
    seed: PeriodicConfig, rule: SubstitutionRule, n_max: int, cap: int
) -> int:
    size = periodic_block(seed).size
    for n in range(n_max + 1):
        if size * len(rule.model.seed_cells) ** n > cap:
            return n - 1
    return n_max


def spectral_convergence_table(
    rule: SubstitutionRule,
    spec: OperatorSpec,
    seed: PeriodicConfig,
    n_max: int,
    grid: int,
    certificate: ConvergenceCertificate | None = None,
    require_convergence: bool = True,
    workers: int | None = None,
    matrix_cap: int | None = None,
) -> SpectralTable:
    """Spectra of ``Sⁿ(ω₀)`` for ``n ≤ n_max`` and their successive gaps.

    The bound column is the dynamical rate ``C/λ₀ⁿ`` of a converging seed.

    Raises:
        DivergentSeed: If the seed diverges and convergence is required.
        MatrixTooLarge: If ``Sⁿ(ω₀)`` has more cells than the cap for some
            ``n ≤ n_max``; carries the largest feasible level.
    """
    model = require_block_lattice(rule.model)
    cap = matrix_cap or int(aperiodiq_setting("MATRIX_CAP"))
    feasible = _feasible_level(seed, rule, n_max, cap)
    if feasible < n_max:
        size = periodic_block(seed).size * len(rule.model.seed_cells) ** (feasible + 1)
        raise MatrixTooLarge(size, cap, feasible if feasible >= 0 else None)

    certificate = certificate or certify(build_graph(rule), seed)
    if not certificate.converges and require_convergence:
        raise DivergentSeed(certificate)
    c_constant = None
    if certificate.converges:
        legal_level = certificate.legal_level
        if legal_level is None:
            legal_level = certificate.bound_level
        lin_rep = lin_rep_lower_bound(rule, 1)
        c_constant, _, _ = rate_constant(model, lin_rep, legal_level)

    spectra = []
    for n in range(n_max + 1):
        config = substitute_periodic(rule, seed, n)
        spectra.append(spectrum(spec, config, grid, workers, cap))
        logger.info("Level %d: %d spectral samples", n, len(spectra[-1]))

    rows = []
    for n, current in enumerate(spectra):
        following = spectra[n + 1] if n < n_max else None
        gap = hausdorff_1d(current, following) if following is not None else None
        error = current.error_radius
        if following is not None:
            error += following.error_radius
        bound = c_constant / model.stretch**n if c_constant is not None else None
        size = current.band_matrix.shape[1]
        rows.append(SpectralRow(n, size, gap, error, bound))
    return SpectralTable(
        tuple(rows), spec.name, grid, certificate.converges, c_constant
    )
