"""Construction, verification and reduction of testing domains.

A finite shape ``T`` is a testing domain when the inflations ``V(n, T)``
eventually cover every ball up to a lattice translation. Everything here is
decided with the quotient map of the lattice backend: a point ``w`` lies in
``Dⁿ(γ)·V(n, T) ∩ Γ`` exactly when ``quotient(n, w)`` lies in ``γT``.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable

from core.conf import aperiodiq_setting
from lattices.domain import (
    GroupElement,
    LatticeModel,
    LatticePointSet,
    ResourceLimitExceeded,
)

from .exceptions import NoSufficiencyWitness, VerificationFailed
from .models import (
    CanonicalDomain,
    DomainCertificate,
    ReductionResult,
    ReductionStep,
    SufficiencyWitness,
)

logger = logging.getLogger(__name__)

CENTROID_CANDIDATES = 64


def sufficiency_witness(model: LatticeModel) -> SufficiencyWitness:
    """Find a ball that stays inside the supports under dilation.

    A ball ``B(z, r) ⊆ V(s) ∩ Γ`` declared by the backend is preferred, giving
    ``C_minus = (r - r_plus) - r/λ₀``. Without one, when
    ``λ₀ > 1 + r_plus/r_minus`` the identity ball of radius
    ``(r_minus/λ₀)(λ₀ - (1 + r_plus/r_minus))`` works with ``s = 0``; otherwise
    a ball is searched for near the centroid of ``V(s)``.

    Raises:
        NoSufficiencyWitness: If no ball is found for ``s ≤ M_MAX``.
    """
    lam = model.stretch
    declared = model.declared_witness()
    if declared is not None:
        centre, shift, radius = declared
        witness = _witness_from_ball(model, centre, shift, radius)
        if witness is not None:
            return witness
        logger.warning("Declared sufficiency ball of %r does not fit", model)

    ratio = model.r_plus / model.r_minus
    if lam > 1 + ratio:
        c_minus = (model.r_minus / lam) * (lam - (1 + ratio))
        return SufficiencyWitness(c_minus, 0, model.identity, "a")

    radius = 2 * model.r_plus * Fraction(lam, lam - 1)
    max_shift = int(aperiodiq_setting("M_MAX"))
    for shift in range(1, max_shift + 1):
        try:
            support = model.support(shift, [model.identity])
        except ResourceLimitExceeded as exc:
            logger.debug("Stopping sufficiency search at s=%d: %s", shift, exc)
            break
        for centre in _near_centroid(support):
            witness = _witness_from_ball(model, centre, shift, radius)
            if witness is not None:
                logger.info("Sufficiency ball found at s=%d, z=%s", shift, centre)
                return witness
    raise NoSufficiencyWitness(max_shift)


def _witness_from_ball(
    model: LatticeModel, centre: GroupElement, shift: int, radius: Fraction
) -> SufficiencyWitness | None:
    c_minus = (radius - model.r_plus) - radius / model.stretch
    if c_minus <= 0:
        return None
    ball = model.ball_points(centre, radius)
    if not all(model.in_support(shift, p) for p in ball):
        return None
    witness = SufficiencyWitness(c_minus, shift, centre, "b")
    return witness if witness.holds(model) else None


def _near_centroid(points: LatticePointSet) -> list[GroupElement]:
    count = len(points)
    mean = [sum(axis) / count for axis in zip(*points)]
    ranked = sorted(
        points,
        key=lambda p: (sum((c - m) ** 2 for c, m in zip(p, mean)), p),
    )
    return ranked[:CENTROID_CANDIDATES]


def canonical_domain(
    model: LatticeModel,
    witness: SufficiencyWitness | None = None,
    delta: Fraction | None = None,
    use_backend: bool = True,
) -> CanonicalDomain:
    """Build the testing domain ``V(s₁+s₂) ∩ Γ`` with its constant ``C_T``.

    ``s₂`` is the least ``s ≥ 1`` with ``sup ‖V̄‖ < C_minus·λ₀ˢ`` and
    ``δ = min(r_minus/2, C_minus·λ₀^{s₂} - sup ‖V̄‖)`` unless given.
    Backends that ship a smaller testing domain with a known constant return
    that one instead when ``use_backend`` is set.

    Args:
        model: The lattice backend.
        witness: A precomputed sufficiency witness.
        delta: Optional thickening radius overriding the default.
        use_backend: Whether a backend-provided domain may be returned.
    """
    witness = witness or sufficiency_witness(model)
    closure = Fraction(model.closure_radius)
    s2 = 1
    while witness.c_minus * model.stretch**s2 <= closure:
        s2 += 1
    slack = witness.c_minus * model.stretch**s2 - closure
    if delta is None:
        floor = Fraction(math.floor(slack * 10**6), 10**6)
        delta = min(model.r_minus / 2, floor if floor > 0 else slack)
    elif not 0 < delta <= slack:
        raise ValueError(f"delta must lie in (0, {float(slack):.6g}], got {delta}")

    backend = model.testing_tuple() if use_backend else None
    if backend is not None and model.testing_constant is not None:
        domain, _ = backend
        return CanonicalDomain(
            domain, model.testing_constant, witness.shift, s2, delta, "backend"
        )
    domain = model.support(witness.shift + s2, [model.identity])
    logger.info(
        "Canonical testing domain of %r: s1=%d, s2=%d, |T|=%d",
        model,
        witness.shift,
        s2,
        len(domain),
    )
    return CanonicalDomain(domain, 1 / delta, witness.shift, s2, delta)


def covering_witnesses(
    model: LatticeModel,
    reference: LatticePointSet,
    candidate: LatticePointSet,
    n: int,
    radius: Fraction | None = None,
    fail_fast: bool = False,
) -> tuple[dict[GroupElement, GroupElement], list[GroupElement]]:
    """Search ``γ_x`` with ``x·T₀ ⊆ Dⁿ(γ_x)·V(n, T) ∩ Γ`` over a transversal.

    The transversal is ``V(n) ∩ Γ``. With ``q₀`` any quotient of ``x·T₀`` the
    only possible witnesses are ``q₀·t⁻¹`` for ``t ∈ T``; the nearest admissible
    one is kept. When ``radius`` is given, ``γ`` must also satisfy
    ``d(D⁻ⁿ(x), γ) < radius``.

    Returns:
        The witnesses found and the transversal points without one.
    """
    found: dict[GroupElement, GroupElement] = {}
    missing: list[GroupElement] = []
    members = candidate.members
    scaled = radius * model.stretch**n if radius is not None else None
    for x in model.support(n, [model.identity]):
        quotients = list(
            dict.fromkeys(model.quotient(n, model.multiply(x, t)) for t in reference)
        )
        anchor = quotients[0]
        best = None
        for t in candidate:
            gamma = model.multiply(anchor, model.inverse(t))
            image = model.dilate(n, gamma)
            if scaled is not None and not model.within(x, image, scaled):
                continue
            shift = model.inverse(gamma)
            if all(model.multiply(shift, q) in members for q in quotients):
                key = (model.distance_key(x, image), gamma)
                if best is None or key < best:
                    best = key
        if best is None:
            missing.append(x)
            if fail_fast:
                break
        else:
            found[x] = best[1]
    return found, missing


def verify_domain(
    model: LatticeModel,
    reference: Iterable[GroupElement],
    candidate: Iterable[GroupElement],
    n0: int = 1,
    fail_fast: bool = False,
) -> DomainCertificate:
    """Run the covering check on a candidate testing domain.

    For every ``x ∈ V(N₀) ∩ Γ`` a witness ``γ_x`` is searched in the ball
    ``B(D^{-N₀}(x), R_T + C_plus)`` with ``R_T = max_{t∈T} d(e, t) + 1``.

    Args:
        model: The lattice backend.
        reference: A verified testing domain ``T₀`` containing ``e``.
        candidate: The candidate ``T``.
        n0: The level ``N₀``, at least 1.
        fail_fast: Stop at the first transversal point without a witness.

    Returns:
        A certificate holding all witnesses.

    Raises:
        ValueError: If ``n0 < 1``, a set is empty or ``e ∉ T₀``.
        VerificationFailed: If some transversal point has no witness.
    """
    if n0 < 1:
        raise ValueError(f"N0 must be at least 1, got {n0}")
    reference = LatticePointSet.of(model.validate(p) for p in reference)
    candidate = LatticePointSet.of(model.validate(p) for p in candidate)
    if not candidate:
        raise ValueError("Candidate testing domain is empty")
    if model.identity not in reference:
        raise ValueError("Reference testing domain must contain the identity")

    r_t = max(model.norm_upper_bound(t) for t in candidate) + 1
    found, missing = covering_witnesses(
        model, reference, candidate, n0, r_t + model.c_plus, fail_fast
    )
    if missing:
        logger.debug(
            "Candidate of size %d rejected at N0=%d (%d transversal points fail)",
            len(candidate),
            n0,
            len(missing),
        )
        raise VerificationFailed(missing, n0)
    logger.debug("Candidate of size %d certified at N0=%d", len(candidate), n0)
    return DomainCertificate(reference, candidate, n0, found)


def _removal_moves(
    model: LatticeModel, domain: LatticePointSet
) -> list[tuple[str, frozenset[GroupElement]]]:
    e = model.identity
    slabs = []
    for axis in range(model.dimension):
        values = sorted({p[axis] for p in domain})
        if len(values) < 2:
            continue
        for value in (values[0], values[-1]):
            removed = frozenset(p for p in domain if p[axis] == value)
            if e in removed:
                continue
            probe = tuple(value if i == axis else 0 for i in range(model.dimension))
            key = (model.distance_key(e, probe), value, axis)
            slabs.append((key, f"slab {axis}={value}", removed))
    slabs.sort(key=lambda item: item[0], reverse=True)

    points = sorted(
        (p for p in domain if p != e),
        key=lambda p: (model.distance_key(e, p), p),
        reverse=True,
    )
    moves, seen = [], set()
    for _, label, removed in slabs:
        if removed not in seen:
            seen.add(removed)
            moves.append((label, removed))
    for p in points:
        removed = frozenset([p])
        if removed not in seen:
            seen.add(removed)
            moves.append((f"point {p}", removed))
    return moves


def reduce_domain(
    model: LatticeModel, domain: Iterable[GroupElement], n0: int = 1
) -> ReductionResult:
    """Greedily shrink a testing domain while the covering check keeps certifying it.

    Axis slabs are tried before single points, farthest from ``e`` first. A
    removal is kept when the smaller set certifies against the current one;
    the move list is then rebuilt. The result is locally minimal for these
    moves, and each step carries its certificate so the chain can be checked.

    Args:
        model: The lattice backend.
        domain: A verified testing domain containing ``e``.
        n0: The level ``N₀`` used for every verification.
    """
    initial = LatticePointSet.of(model.validate(p) for p in domain)
    if model.identity not in initial:
        raise ValueError("Testing domain must contain the identity")
    current = initial
    steps: list[ReductionStep] = []
    reduced = True
    while reduced:
        reduced = False
        for label, removed in _removal_moves(model, current):
            candidate = current.without(removed)
            try:
                certificate = verify_domain(
                    model, current, candidate, n0, fail_fast=True
                )
            except VerificationFailed:
                continue
            logger.info(
                "Removed %s: %d -> %d points", label, len(current), len(candidate)
            )
            steps.append(ReductionStep(label, certificate))
            current = candidate
            reduced = True
            break
    return ReductionResult(initial, current, tuple(steps))
