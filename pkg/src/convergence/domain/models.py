"""Substitution graphs, convergence certificates and rate reports.

The substitution graph has one vertex per window ``𝒜^T`` and an edge
``P → Q`` when both are illegal and ``Q`` occurs in ``S^{N_T}(P)``. Its
vertex set is usually far too large to list, so successors are computed on
first visit and legality is looked up per vertex.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from lattices.domain import LatticePointSet
from substitutions.domain import (
    LegalDictionary,
    SubstitutionRule,
    WindowExtractor,
    WindowPatch,
    is_legal,
)

from .exceptions import GraphTooLarge
from .value_objects import Verdict

Row = tuple[int, ...]


class SubstitutionGraph:
    """The graph ``G_S(T, N_T)`` with lazily computed edges.

    Attributes:
        rule: The substitution rule.
        shape: The testing domain ``T``.
        step: The self-covering step ``N_T``.
    """

    def __init__(
        self,
        rule: SubstitutionRule,
        shape: LatticePointSet,
        step: int,
        dictionary: LegalDictionary | None = None,
    ):
        self.rule = rule
        self.shape = shape
        self.step = step
        self._dictionary = dictionary
        self._legal: dict[Row, bool] = {}
        self._successors: dict[Row, tuple[Row, ...]] = {}

    @property
    def vertex_count(self) -> int:
        return len(self.rule.alphabet) ** len(self.shape)

    @cached_property
    def _extractor(self) -> WindowExtractor:
        return WindowExtractor.cached(self.rule, self.shape, self.step, self.shape)

    def is_legal(self, row: Row) -> bool:
        if row not in self._legal:
            dictionary = self._dictionary or self.rule.cache.get(
                ("dictionary", self.shape)
            )
            if dictionary is not None:
                self._legal[row] = row in dictionary
            else:
                self._legal[row] = is_legal(self.rule, WindowPatch(self.shape, row))
        return self._legal[row]

    def successors(self, row: Row) -> tuple[Row, ...]:
        """Illegal windows of ``S^{N_T}(P)``; legal vertices have none."""
        if row not in self._successors:
            if self.is_legal(row):
                found: tuple[Row, ...] = ()
            else:
                windows = self._extractor.distinct_windows(row)
                found = tuple(sorted(w for w in windows if not self.is_legal(w)))
            self._successors[row] = found
        return self._successors[row]

    @property
    def explored(self) -> int:
        """Number of vertices whose successors have been computed."""
        return len(self._successors)

    def vertices(self) -> Iterator[Row]:
        return itertools.product(range(len(self.rule.alphabet)), repeat=len(self.shape))

    def edges(self, cap: int) -> Iterator[tuple[Row, Row]]:
        """Every edge of the graph.

        Raises:
            GraphTooLarge: If there are more than ``cap`` vertices.
        """
        if self.vertex_count > cap:
            raise GraphTooLarge(self.vertex_count, cap)
        for row in self.vertices():
            for target in self.successors(row):
                yield row, target


@dataclass(frozen=True)
class ConvergenceCertificate:
    """The outcome of the graph test for one seed.

    Attributes:
        verdict: Whether ``Sⁿ(ω₀)`` converges to the subshift.
        shape: The testing domain ``T``.
        step: The step ``N_T``.
        seed_windows: The windows ``W(ω₀)_T``.
        illegal_seed_windows: The illegal ones among them.
        cycle: For a diverging seed, a closed path of illegal windows reachable
            from the seed, first and last entry equal.
        bound_level: ``|𝒜^T|·N_T``, after which every ``T``-window is legal.
        legal_level: The least ``n`` with ``W(Sⁿ(ω₀))_T ⊆ W(S)`` found by
            expansion, ``None`` when not checked.
        longest_path: Vertices on the longest illegal path from a seed window.
        explored: Illegal vertices visited by the search.
    """

    verdict: Verdict
    shape: LatticePointSet
    step: int
    seed_windows: tuple[Row, ...]
    illegal_seed_windows: tuple[Row, ...]
    cycle: tuple[Row, ...] = ()
    bound_level: int = 0
    legal_level: int | None = None
    longest_path: int | None = None
    explored: int = 0

    @property
    def converges(self) -> bool:
        return self.verdict is Verdict.CONVERGES


@dataclass(frozen=True)
class RateRow:
    """One level of a rate report.

    Attributes:
        n: The substitution level.
        r_star: Largest tested radius with matching dictionaries.
        delta: The measured distance ``1/(r*+1)``.
        bound: The theoretical bound ``C/λ₀ⁿ``.
        block_bound: ``max{2Ĉ_LR, 4}/2ⁿ`` for planar 2×2 block rules.
    """

    n: int
    r_star: int
    delta: Fraction
    bound: float
    block_bound: float | None = None


@dataclass(frozen=True)
class RateReport:
    """Measured convergence rates with the theoretical constants.

    Attributes:
        rows: One row per level.
        slope: Least-squares slope of ``log δₙ`` against ``n``.
        lower_constant: The largest ``c`` with ``δₙ ≥ c·λ₀⁻ⁿ`` on all rows.
        c_constant: ``max{Ĉ_LR·λ₀ˢ/C_minus, C_T·λ₀^{n₀}}``.
        m1: ``log C / log λ₀``.
        lin_rep: The lower bound ``Ĉ_LR`` used in place of ``C_LR``.
        legal_level: The level ``n₀`` used in ``C``.
        c_minus: The sufficiency radius.
        shift: The sufficiency shift ``s``.
        c_t: The testing constant.
        complexity: ``log |W(S)_{B(e,r)}| / log r`` at the largest radius.
        notes: Remarks printed with the report.
    """

    rows: tuple[RateRow, ...]
    slope: float | None
    lower_constant: float
    c_constant: float
    m1: float
    lin_rep: Fraction
    legal_level: int
    c_minus: Fraction
    shift: int
    c_t: Fraction
    complexity: float | None = None
    notes: tuple[str, ...] = field(default=())
