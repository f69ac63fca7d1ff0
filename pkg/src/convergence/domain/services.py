"""Convergence of substituted seeds.

``Sⁿ(ω₀)`` approximates the subshift exactly when no closed path of the
substitution graph is reachable from the windows of ``ω₀``. The graph is
explored with an iterative depth-first search; rates are then measured by
comparing the dictionaries of ``Sⁿ(ω₀)`` with the legal ones on growing balls.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable

import numpy as np

from core.conf import aperiodiq_setting
from lattices.domain import (
    GroupElement,
    LatticeModel,
    LatticePointSet,
    ResourceLimitExceeded,
    ZdBlockLattice,
)
from substitutions.domain import (
    LegalDictionary,
    PeriodicConfig,
    SubstitutionRule,
    ball_shape,
    complexity_exponent,
    distinct_rows,
    legal_dictionary,
    lin_rep_lower_bound,
    substitute_periodic,
    testing_tuple,
)
from testing_domains.domain import (
    canonical_domain,
    covering_witnesses,
    sufficiency_witness,
)

from .exceptions import DivergentSeed, SearchExhausted
from .models import ConvergenceCertificate, RateReport, RateRow, Row, SubstitutionGraph
from .value_objects import Verdict

logger = logging.getLogger(__name__)

GREY, BLACK = 1, 2


def compute_n_t(
    model: LatticeModel, shape: Iterable[GroupElement], m_max: int | None = None
) -> int:
    """Least ``m`` with every ``x·T`` inside some ``Dᵐ(γ)·V(m, T) ∩ Γ``.

    ``x`` runs over the transversal ``V(m) ∩ Γ``.

    Raises:
        SearchExhausted: If no ``m ≤ m_max`` works.
    """
    shape = LatticePointSet.of(model.validate(p) for p in shape)
    m_max = m_max or int(aperiodiq_setting("M_MAX"))
    for m in range(1, m_max + 1):
        _, missing = covering_witnesses(model, shape, shape, m, fail_fast=True)
        if not missing:
            logger.info("Shape of %d points covers itself at step %d", len(shape), m)
            return m
    raise SearchExhausted(m_max)


def build_graph(
    rule: SubstitutionRule,
    shape: Iterable[GroupElement] | None = None,
    step: int | None = None,
    dictionary: LegalDictionary | None = None,
) -> SubstitutionGraph:
    """The substitution graph on a testing domain.

    Without a shape the rule's testing tuple is used; a shape without a step
    gets its least self-covering step.
    """
    if shape is None:
        shape, default_step = testing_tuple(rule)
        step = step or default_step
    else:
        shape = LatticePointSet.of(rule.model.validate(p) for p in shape)
        step = step or compute_n_t(rule.model, shape)
    return SubstitutionGraph(rule, shape, step, dictionary)


def seed_windows(graph: SubstitutionGraph, seed: PeriodicConfig) -> list[Row]:
    """The windows ``W(ω₀)_T`` over one full period, sorted."""
    return sorted(distinct_rows(seed.window_rows(graph.shape)))


def _search(
    graph: SubstitutionGraph, starts: list[Row]
) -> tuple[tuple[Row, ...], int]:
    """Depth-first search over illegal vertices.

    Returns:
        A closed path when one is reachable, else ``()``; and the number of
        vertices on the longest path from a start.
    """
    colour: dict[Row, int] = {}
    depth: dict[Row, int] = {}
    for start in starts:
        if start in colour:
            continue
        colour[start] = GREY
        stack = [(start, iter(graph.successors(start)))]
        position = {start: 0}
        while stack:
            vertex, pending = stack[-1]
            advanced = False
            for target in pending:
                state = colour.get(target)
                if state is None:
                    colour[target] = GREY
                    position[target] = len(stack)
                    stack.append((target, iter(graph.successors(target))))
                    advanced = True
                    break
                if state == GREY:
                    path = [v for v, _ in stack[position[target] :]]
                    return tuple(path + [target]), 0
            if advanced:
                continue
            colour[vertex] = BLACK
            depth[vertex] = 1 + max(
                (depth[t] for t in graph.successors(vertex)), default=0
            )
            del position[vertex]
            stack.pop()
    return (), max((depth[s] for s in starts), default=0)


def realised_legal_level(
    graph: SubstitutionGraph, seed: PeriodicConfig, max_level: int
) -> int | None:
    """Least ``n ≤ max_level`` with every ``T``-window of ``Sⁿ(ω₀)`` legal.

    Returns ``None`` when an expansion exceeds the point cap first.
    """
    for n in range(max_level + 1):
        try:
            config = substitute_periodic(graph.rule, seed, n)
            rows = distinct_rows(config.window_rows(graph.shape))
        except ResourceLimitExceeded as exc:
            logger.warning("Stopped checking windows of S^%d(seed): %s", n, exc)
            return None
        if all(graph.is_legal(row) for row in rows):
            return n
    return None


def certify(graph: SubstitutionGraph, seed: PeriodicConfig) -> ConvergenceCertificate:
    """Decide convergence of ``Sⁿ(ω₀)`` from the windows of ``ω₀``.

    A closed path of illegal windows reachable from ``W(ω₀)_T`` means
    divergence. Otherwise every illegal path is shorter than ``|𝒜^T|`` and
    all windows are legal from ``|𝒜^T|·N_T`` on; the level where this
    actually happens is found by expansion.
    """
    windows = seed_windows(graph, seed)
    illegal = [row for row in windows if not graph.is_legal(row)]
    cycle, longest = _search(graph, illegal)
    common = dict(
        shape=graph.shape,
        step=graph.step,
        seed_windows=tuple(windows),
        illegal_seed_windows=tuple(illegal),
        bound_level=graph.vertex_count * graph.step,
        explored=graph.explored,
    )
    if cycle:
        logger.info(
            "Seed diverges: closed path of %d windows after %d vertices",
            len(cycle) - 1,
            graph.explored,
        )
        return ConvergenceCertificate(Verdict.DIVERGES, cycle=cycle, **common)

    legal_level = realised_legal_level(graph, seed, longest * graph.step)
    logger.info(
        "Seed converges: longest illegal path %d, all windows legal from n=%s",
        longest,
        legal_level,
    )
    return ConvergenceCertificate(
        Verdict.CONVERGES, legal_level=legal_level, longest_path=longest, **common
    )


def saturation_radius(
    rule: SubstitutionRule, config: PeriodicConfig, r_max: int
) -> int:
    """Largest ``r ≤ r_max`` with ``W(ω)_{B(e,r)} = W(S)_{B(e,r)}``, else 0.

    Equality on a ball implies it on every smaller ball, so the scan stops at
    the first mismatch.
    """
    r_star = 0
    for r in range(1, r_max + 1):
        shape = ball_shape(rule, r)
        seen = distinct_rows(config.window_rows(shape))
        if seen != legal_dictionary(rule, shape).rows:
            break
        r_star = r
    return r_star


def measure_delta(
    rule: SubstitutionRule, seed: PeriodicConfig, n: int, r_max: int
) -> Fraction:
    """The distance ``1/(r*+1)`` of ``Sⁿ(ω₀)`` to the subshift, up to ``r_max``."""
    config = substitute_periodic(rule, seed, n)
    return Fraction(1, saturation_radius(rule, config, r_max) + 1)


def rate_constant(
    model: LatticeModel, lin_rep: Fraction, legal_level: int
) -> tuple[float, float, dict]:
    """The constants ``C`` and ``M₁`` of the exponential rate.

    ``C = max{C_LR·λ₀ˢ/C_minus, C_T·λ₀^{n₀}}`` and ``M₁ = log C / log λ₀``,
    evaluated in log space so large ``n₀`` give ``inf`` rather than overflow.

    Returns:
        ``C``, ``M₁`` and the ingredients ``c_minus``, ``shift`` and ``c_t``.
    """
    witness = sufficiency_witness(model)
    c_t = canonical_domain(model, witness).c_t
    log_lam = math.log(model.stretch)
    log_c = max(
        math.log(lin_rep / witness.c_minus) + witness.shift * log_lam,
        math.log(c_t) + legal_level * log_lam,
    )
    c = math.exp(log_c) if log_c < 700 else math.inf
    parts = {"c_minus": witness.c_minus, "shift": witness.shift, "c_t": c_t}
    return c, log_c / log_lam, parts


def _fit_slope(levels: list[int], deltas: list[Fraction]) -> float | None:
    if len(levels) < 2:
        return None
    logs = np.log(np.array([float(d) for d in deltas]))
    return float(np.polyfit(np.array(levels, dtype=float), logs, 1)[0])


def rate_report(
    rule: SubstitutionRule,
    seed: PeriodicConfig,
    n_max: int,
    r_max: int,
    certificate: ConvergenceCertificate | None = None,
    lin_rep_radius: int = 1,
) -> RateReport:
    """Measure ``δₙ`` for ``n ≤ n_max`` and compare with the theoretical rate.

    Raises:
        DivergentSeed: If the seed does not converge.
    """
    certificate = certificate or certify(build_graph(rule), seed)
    if not certificate.converges:
        raise DivergentSeed(certificate)

    model = rule.model
    lin_rep = lin_rep_lower_bound(rule, lin_rep_radius)
    notes = ["constant uses a lower bound on C_LR"]
    legal_level = certificate.legal_level
    if legal_level is None:
        legal_level = certificate.bound_level
        notes.append("n0 falls back to |A^T|*N_T")
    c, m1, parts = rate_constant(model, lin_rep, legal_level)
    planar_pairs = isinstance(model, ZdBlockLattice) and model.blocks == (2, 2)
    block_constant = max(2 * float(lin_rep), 4.0)

    rows, deltas = [], []
    for n in range(n_max + 1):
        config = substitute_periodic(rule, seed, n)
        r_star = saturation_radius(rule, config, r_max)
        delta = Fraction(1, r_star + 1)
        block_bound = block_constant / 2**n if planar_pairs else None
        rows.append(RateRow(n, r_star, delta, c / model.stretch**n, block_bound))
        deltas.append(delta)
        logger.debug("n=%d: r*=%d, delta=%s", n, r_star, delta)

    levels = [row.n for row in rows]
    lower = min(float(d) * model.stretch**n for n, d in zip(levels, deltas))
    complexity = complexity_exponent(rule, r_max) if r_max > 1 else None
    return RateReport(
        rows=tuple(rows),
        slope=_fit_slope(levels, deltas),
        lower_constant=lower,
        c_constant=c,
        m1=m1,
        lin_rep=lin_rep,
        legal_level=legal_level,
        c_minus=parts["c_minus"],
        shift=parts["shift"],
        c_t=parts["c_t"],
        complexity=complexity,
        notes=tuple(notes),
    )
