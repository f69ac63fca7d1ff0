"""Substitution maps, legality and periodic configurations.

Legal dictionaries are built in two stages. On the backend's small testing
domain ``T_b`` the windows of letter iterates are closed under the set map
``Φ(X) = ⋃_{P ∈ X} T_b-windows of S^{N}(P)``; the cumulative union of the
iterates ``Φᵏ(X₀)`` is exactly this closure. Any other shape ``T`` is then
lifted: ``W(S)_T`` is the union of the ``T``-windows of ``Sᵏ(Q)`` over legal
``Q`` on ``T_b``, with ``k`` the least level at which every translate of ``T``
fits in one ``k``-supertile of a ``T_b``-window.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable

import numpy as np

from core.conf import aperiodiq_setting
from lattices.domain import GroupElement, LatticePointSet, ZdBlockLattice
from testing_domains.domain import canonical_domain, covering_witnesses

from .arrays import inflate_periodic, letter_images
from .exceptions import NonPrimitiveRule, NoTestingTuple
from .models import (
    BlockPeriodicConfig,
    ConstantConfig,
    DilationPeriodicConfig,
    Patch,
    PeriodicConfig,
    SubstitutionRule,
)
from .value_objects import WindowPatch
from .windows import LegalDictionary, WindowExtractor, distinct_rows, locate_windows

logger = logging.getLogger(__name__)

LIN_REP_MAX_FACTOR = 32


def substitute_patch(rule: SubstitutionRule, patch: Patch) -> Patch:
    """Apply the substitution map to a finite patch.

    The result lives on ``V(1, supp P) ∩ Γ`` and carries ``S₀(P(γ))(κ)`` at
    ``D(γ)·κ``.
    """
    if not patch.support:
        return Patch.empty()
    model = rule.model
    cells = model.seed_cells.points
    mapping = {}
    for gamma, letter in zip(patch.support, patch.values):
        image = rule.table[letter]
        base = model.dilate(1, gamma)
        for kappa, value in zip(cells, image.tolist()):
            mapping[model.multiply(base, kappa)] = value
    return Patch.from_mapping(mapping)


def iterate_letter(rule: SubstitutionRule, letter: int, n: int) -> Patch:
    """The patch ``Sⁿ(a)`` on ``V(n) ∩ Γ``.

    Raises:
        ValueError: If ``n`` is negative.
        ResourceLimitExceeded: If the support exceeds the point cap.
    """
    if n < 0:
        raise ValueError(f"Level must be nonnegative, got {n}")
    points = rule.digit_points(n)
    values = rule.level_table(n)[letter].tolist()
    return Patch.from_mapping(dict(zip(points, values)))


def window_patches(
    source: Patch | PeriodicConfig,
    shape: Iterable[GroupElement],
    search_region: Iterable[GroupElement] | None = None,
    model=None,
) -> set[WindowPatch]:
    """The distinct ``T``-windows of a patch or a periodic configuration.

    Args:
        source: A finite patch or a periodic configuration.
        shape: The window shape ``T``.
        search_region: Anchors ``x`` to read ``x·T`` at. Defaults to the
            support of a patch or to one full period of a configuration.
        model: The lattice backend; required for patches.

    Returns:
        The windows re-anchored to ``T``. For a patch only anchors with
        ``x·T`` inside the support contribute.
    """
    shape = LatticePointSet.of(shape)
    if isinstance(source, PeriodicConfig):
        if search_region is None:
            rows = distinct_rows(source.window_rows(shape))
        else:
            rows = {
                tuple(source.value(source.model.multiply(x, t)) for t in shape)
                for x in search_region
            }
        return {WindowPatch(shape, row) for row in rows}

    if model is None:
        raise ValueError("A lattice model is needed to read windows of a patch")
    if not source.support:
        return set()
    if search_region is None:
        _, index = locate_windows(model, source.support.points, shape)
        values = np.array(source.values, dtype=np.uint8)
        return {WindowPatch(shape, row) for row in distinct_rows(values[index])}
    found = set()
    for x in search_region:
        points = [model.multiply(x, t) for t in shape]
        if all(p in source.support for p in points):
            found.add(WindowPatch(shape, tuple(source.value_at(p) for p in points)))
    return found


def primitivity_exponent(rule: SubstitutionRule) -> int | None:
    """Least ``L`` such that every letter occurs in ``S^L(b)`` for every ``b``.

    Powers of the occurrence matrix are tested up to the Wielandt bound
    ``(|𝒜| - 1)² + 1``.
    """
    key = ("primitivity",)
    if key in rule.cache:
        return rule.cache[key]
    matrix = rule.occurrence_matrix().astype(np.int64)
    size = len(matrix)
    power = np.eye(size, dtype=np.int64)
    exponent = None
    for level in range(1, (size - 1) ** 2 + 2):
        power = np.minimum(power @ matrix, 1)
        if power.all():
            exponent = level
            break
    rule.cache[key] = exponent
    return exponent


def _require_primitive(rule: SubstitutionRule, operation: str) -> None:
    if primitivity_exponent(rule) is None:
        raise NonPrimitiveRule(operation)


def probe_levels(rule: SubstitutionRule) -> list[int]:
    """Levels whose letter iterates stay within the probe budget."""
    budget = int(aperiodiq_setting("PROBE_POINTS"))
    cells = len(rule.model.seed_cells)
    levels = [0]
    while cells ** (levels[-1] + 1) <= budget:
        levels.append(levels[-1] + 1)
    return levels


def testing_tuple(rule: SubstitutionRule) -> tuple[LatticePointSet, int]:
    """The small testing domain ``T_b`` and step ``N`` dictionaries start from.

    Uses the backend's shipped tuple, else the canonical testing domain with
    its least self-covering step.
    """
    key = ("testing-tuple",)
    if key in rule.cache:
        return rule.cache[key]
    model = rule.model
    shipped = model.testing_tuple()
    if shipped is not None:
        result = shipped
    else:
        domain = canonical_domain(model).domain
        max_level = int(aperiodiq_setting("M_MAX"))
        for level in range(1, max_level + 1):
            _, missing = covering_witnesses(
                model, domain, domain, level, fail_fast=True
            )
            if not missing:
                result = (domain, level)
                break
        else:
            raise NoTestingTuple(max_level)
    rule.cache[key] = result
    return result


def _base_dictionary(rule: SubstitutionRule) -> LegalDictionary:
    base, step = testing_tuple(rule)
    key = ("dictionary", base)
    if key in rule.cache:
        return rule.cache[key]

    letters = np.arange(len(rule.alphabet))[:, None]
    known: set[tuple[int, ...]] = set()
    for level in probe_levels(rule):
        extractor = WindowExtractor.cached(
            rule, LatticePointSet.of([rule.model.identity]), level, base
        )
        known |= extractor.distinct_windows(letters)

    phi = WindowExtractor.cached(rule, base, step, base)
    frontier = set(known)
    iterations = 0
    while frontier:
        iterations += 1
        batch = np.array(sorted(frontier), dtype=np.intp)
        frontier = phi.distinct_windows(batch) - known
        known |= frontier
        logger.debug("Closure step %d: %d new windows", iterations, len(frontier))

    logger.info(
        "Legal dictionary on the %d-point testing domain: %d windows after %d steps",
        len(base),
        len(known),
        iterations,
    )
    dictionary = LegalDictionary(base, frozenset(known))
    rule.cache[key] = dictionary
    return dictionary


def lifting_level(rule: SubstitutionRule, shape: LatticePointSet) -> int:
    """Least ``k`` with every translate of ``T`` inside a ``k``-supertile of ``T_b``."""
    model = rule.model
    base, _ = testing_tuple(rule)
    if isinstance(model, ZdBlockLattice) and base == model.testing_tuple()[0]:
        extents = [hi - lo + 1 for lo, hi in shape.bounding_box()]
        return model.covering_level(extents)
    level = 0
    while True:
        _, missing = covering_witnesses(model, shape, base, level, fail_fast=True)
        if not missing:
            return level
        level += 1


def legal_dictionary(
    rule: SubstitutionRule, shape: Iterable[GroupElement]
) -> LegalDictionary:
    """The set ``W(S)_T`` of legal windows on a finite shape.

    Raises:
        NonPrimitiveRule: If the rule is not primitive.
        ResourceLimitExceeded: If an expansion exceeds the point cap.
    """
    shape = LatticePointSet.of(rule.model.validate(p) for p in shape)
    if not shape:
        raise ValueError("Window shape must not be empty")
    key = ("dictionary", shape)
    if key in rule.cache:
        return rule.cache[key]
    _require_primitive(rule, "legal_dictionary")

    base = _base_dictionary(rule)
    if shape == base.shape:
        return base
    level = lifting_level(rule, shape)
    extractor = WindowExtractor.cached(rule, base.shape, level, shape)
    rows = extractor.distinct_windows(base.array)
    logger.info(
        "Legal dictionary on a %d-point shape: %d windows (lifted %d levels)",
        len(shape),
        len(rows),
        level,
    )
    dictionary = LegalDictionary(shape, frozenset(rows))
    rule.cache[key] = dictionary
    return dictionary


def is_legal(rule: SubstitutionRule, window: WindowPatch) -> bool:
    """Whether a window occurs in some letter iterate.

    Letter iterates within the probe budget are scanned first; a miss falls
    back to the legal dictionary of the window's shape.
    """
    _require_primitive(rule, "is_legal")
    values = np.array(window.values, dtype=np.uint8)
    origin = LatticePointSet.of([rule.model.identity])
    letters = np.arange(len(rule.alphabet))[:, None]
    for level in probe_levels(rule):
        extractor = WindowExtractor.cached(rule, origin, level, window.shape)
        if not len(extractor.positions):
            continue
        if np.any(np.all(extractor.windows(letters) == values, axis=1)):
            return True
    return window in legal_dictionary(rule, window.shape)


def substitute_periodic(
    rule: SubstitutionRule, config: PeriodicConfig, n: int
) -> PeriodicConfig:
    """The periodic configuration ``Sⁿ(ω₀)``.

    Block lattices get an explicit block of period ``mⁿ ⊙ p``; other
    backends get a dilation-periodic description evaluated through the
    quotient decomposition.
    """
    if n < 0:
        raise ValueError(f"Level must be nonnegative, got {n}")
    if n == 0:
        return config
    model = rule.model
    if isinstance(config, DilationPeriodicConfig):
        return DilationPeriodicConfig(rule, config.level + n, config.base)
    if isinstance(model, ZdBlockLattice):
        if isinstance(config, ConstantConfig):
            block = np.full((1,) * model.dimension, config.letter, dtype=np.uint8)
        else:
            block = config.block
        size = math.prod(block.shape) * len(model.seed_cells) ** n
        model._guard(size)
        images = letter_images(rule.table, model.blocks)
        for _ in range(n):
            block = inflate_periodic(images, block, model.blocks)
        return BlockPeriodicConfig(model, block)
    return DilationPeriodicConfig(rule, n, config)


def ball_shape(rule: SubstitutionRule, r) -> LatticePointSet:
    return rule.model.ball_points(rule.model.identity, r)


def patch_count(rule: SubstitutionRule, r) -> int:
    """Number of legal patches on ``B(e, r) ∩ Γ``."""
    return len(legal_dictionary(rule, ball_shape(rule, r)))


def complexity_exponent(rule: SubstitutionRule, r: int) -> float:
    """The box-counting estimate ``log |W(S)_{B(e,r)}| / log r`` for ``r > 1``."""
    if r <= 1:
        raise ValueError(f"Radius must exceed 1, got {r}")
    return math.log(patch_count(rule, r)) / math.log(r)


def _contains_all(
    big: LegalDictionary, inner: np.ndarray, small: frozenset[tuple[int, ...]]
) -> bool:
    subs = big.array[:, inner]
    for window in subs:
        if not small.issubset(map(tuple, window.tolist())):
            return False
    return True


def lin_rep_lower_bound(rule: SubstitutionRule, r_max: int) -> Fraction:
    """A lower bound on the linear repetitivity constant.

    For every integer ``r ≤ r_max`` the least integer ``R ≥ r`` is found such
    that every legal ``B(e, R)``-patch contains every legal ``B(e, r)``-patch;
    the bound is the largest ratio ``R/r``, and at least 1.
    """
    _require_primitive(rule, "lin_rep_lower_bound")
    model = rule.model
    bound = Fraction(1)
    for r in range(1, r_max + 1):
        small_shape = ball_shape(rule, r)
        small = legal_dictionary(rule, small_shape).rows
        radius = r
        while True:
            big_shape = ball_shape(rule, radius)
            big = legal_dictionary(rule, big_shape)
            _, inner = locate_windows(model, big_shape.points, small_shape)
            if _contains_all(big, inner, small):
                break
            if radius >= LIN_REP_MAX_FACTOR * r:
                logger.warning(
                    "Repetitivity search for r=%d stopped at R=%d", r, radius
                )
                break
            radius += 1
        logger.debug("Every legal %d-ball patch holds all %d-ball patches", radius, r)
        bound = max(bound, Fraction(radius, r))
    return bound
