"""Patches, substitution rules and periodic configurations.

A rule assigns to every letter a patch on the seed cells ``K`` of the lattice
backend. Iterates are kept in *digit order*: the points of ``V(n) ∩ Γ`` are
listed as ``D(γ)·κ`` with ``γ`` running over the level ``n-1`` list and ``κ``
over ``K``, which makes the values of ``Sⁿ(a)`` a single numpy gather
``table[values of S^{n-1}(a)]``.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from lattices.domain import GroupElement, LatticeModel, LatticePointSet

from .arrays import periodic_window_rows
from .exceptions import InvalidRule, UnknownLetter, UnknownSeed
from .value_objects import Alphabet


@dataclass(frozen=True)
class Patch:
    """A letter assignment on a finite point set.

    Attributes:
        support: The points carrying a letter.
        values: Letter index per support point, in support order.
    """

    support: LatticePointSet
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.support):
            raise ValueError("A patch needs exactly one value per support point")

    @classmethod
    def from_mapping(cls, mapping: dict[GroupElement, int]) -> "Patch":
        support = LatticePointSet.of(mapping)
        return cls(support, tuple(int(mapping[p]) for p in support))

    @classmethod
    def empty(cls) -> "Patch":
        return cls(LatticePointSet(()), ())

    def as_mapping(self) -> dict[GroupElement, int]:
        return dict(zip(self.support.points, self.values))

    def value_at(self, point: GroupElement) -> int:
        return self.values[self.support.index[point]]

    def translate(self, model: LatticeModel, g: GroupElement) -> "Patch":
        return Patch.from_mapping(
            {model.multiply(g, p): v for p, v in zip(self.support, self.values)}
        )

    def restrict(self, points: Iterable[GroupElement]) -> "Patch":
        return Patch.from_mapping({p: self.value_at(p) for p in points})

    def __len__(self) -> int:
        return len(self.values)


class SubstitutionRule:
    """A substitution rule ``S₀: 𝒜 → 𝒜^K`` on a lattice backend.

    Attributes:
        model: The lattice backend.
        alphabet: The alphabet.
        table: Array of shape ``(|𝒜|, |K|)``; row ``a`` lists ``S₀(a)`` over
            the seed cells in their lexicographic order.
    """

    def __init__(
        self,
        model: LatticeModel,
        alphabet: Alphabet,
        table: Sequence[Sequence[int]] | np.ndarray,
    ):
        cells = len(model.seed_cells)
        array = np.array(table, dtype=np.int64)
        if array.shape != (len(alphabet), cells):
            raise InvalidRule(
                f"expected a {len(alphabet)} x {cells} table, got shape {array.shape}"
            )
        if array.min() < 0 or array.max() >= len(alphabet):
            raise InvalidRule("table refers to letters outside the alphabet")
        self.model = model
        self.alphabet = alphabet
        self.table = array.astype(np.uint8)
        self.table.setflags(write=False)
        self._level_tables: dict[int, np.ndarray] = {
            0: np.arange(len(alphabet), dtype=np.uint8)[:, None]
        }
        self._digit_points: dict[int, list[GroupElement]] = {0: [model.identity]}
        self.cache: dict = {}

    @property
    def stretch(self) -> int:
        return self.model.stretch

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubstitutionRule)
            and self.model == other.model
            and self.alphabet == other.alphabet
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.model, self.alphabet, self.table.tobytes()))

    def image(self, letter: int) -> Patch:
        """The patch ``S₀(a)`` on the seed cells."""
        cells = self.model.seed_cells
        return Patch(cells, tuple(int(v) for v in self.table[letter]))

    def digit_points(self, n: int) -> list[GroupElement]:
        """The points of ``V(n) ∩ Γ`` in digit order."""
        if n not in self._digit_points:
            self.model._guard(len(self.model.seed_cells) ** n)
            previous = self.digit_points(n - 1)
            cells = self.model.seed_cells.points
            model = self.model
            self._digit_points[n] = [
                model.multiply(model.dilate(1, gamma), kappa)
                for gamma in previous
                for kappa in cells
            ]
        return self._digit_points[n]

    def level_table(self, n: int) -> np.ndarray:
        """Array of shape ``(|𝒜|, |K|ⁿ)`` holding ``Sⁿ(a)`` in digit order."""
        if n not in self._level_tables:
            self.model._guard(len(self.model.seed_cells) ** n)
            previous = self.level_table(n - 1)
            size = len(self.alphabet)
            self._level_tables[n] = self.table[previous].reshape(size, -1)
        return self._level_tables[n]

    def expand(self, values: np.ndarray, n: int) -> np.ndarray:
        """Values of ``Sⁿ(P)`` on ``V(n, supp P)`` for ``P`` given by its values.

        The result lists, for each point ``t`` of the support in order, the
        values on ``Dⁿ(t)·V(n)`` in digit order.
        """
        return self.level_table(n)[values].reshape(-1)

    def occurrence_matrix(self) -> np.ndarray:
        """Boolean matrix ``M[b, a]``: letter ``a`` occurs in ``S₀(b)``."""
        size = len(self.alphabet)
        matrix = np.zeros((size, size), dtype=bool)
        for b in range(size):
            matrix[b, np.unique(self.table[b])] = True
        return matrix


class PeriodicConfig(ABC):
    """A configuration ``Γ → 𝒜`` with a finite-index period sublattice.

    Attributes:
        model: The lattice backend.
    """

    model: LatticeModel

    @abstractmethod
    def value(self, gamma: GroupElement) -> int:
        """The letter at ``γ``."""

    @abstractmethod
    def window_positions(self) -> list[GroupElement]:
        """One representative of every coset of the period sublattice."""

    def window_rows(self, shape: LatticePointSet) -> np.ndarray:
        """Distinct value rows of the ``T``-windows over one full period."""
        rows = np.array(
            [
                [self.value(self.model.multiply(x, t)) for t in shape]
                for x in self.window_positions()
            ],
            dtype=np.uint8,
        ).reshape(-1, len(shape))
        return np.unique(rows, axis=0)

    @property
    def period_size(self) -> int:
        return len(self.window_positions())


@dataclass(frozen=True)
class ConstantConfig(PeriodicConfig):
    """The configuration ``ω_a`` with one letter everywhere."""

    model: LatticeModel
    letter: int

    def value(self, gamma: GroupElement) -> int:
        return self.letter

    def window_positions(self) -> list[GroupElement]:
        return [self.model.identity]


@dataclass(frozen=True, eq=False)
class BlockPeriodicConfig(PeriodicConfig):
    """A ``ℤᵈ`` configuration repeating a block with period vector ``p``.

    Attributes:
        model: The block lattice.
        block: Letter array of shape ``p`` with ``block[γ mod p]`` at ``γ``.
    """

    model: LatticeModel
    block: np.ndarray = field(repr=False)

    def __post_init__(self):
        block = np.array(self.block, dtype=np.uint8)
        if block.ndim != self.model.dimension:
            raise ValueError(
                f"Block has {block.ndim} axes for a {self.model.dimension}-d lattice"
            )
        block.setflags(write=False)
        object.__setattr__(self, "block", block)

    @property
    def period(self) -> tuple[int, ...]:
        return tuple(self.block.shape)

    @property
    def period_size(self) -> int:
        return math.prod(self.period)

    def value(self, gamma: GroupElement) -> int:
        return int(self.block[tuple(c % p for c, p in zip(gamma, self.period))])

    def window_positions(self) -> list[GroupElement]:
        return [tuple(int(c) for c in idx) for idx in np.ndindex(*self.period)]

    def window_rows(self, shape: LatticePointSet) -> np.ndarray:
        return periodic_window_rows(self.block, shape)

    def translate(self, g: GroupElement) -> "BlockPeriodicConfig":
        """The configuration ``γ·ω`` with ``(γ·ω)(x) = ω(x - γ)``."""
        return BlockPeriodicConfig(
            self.model, np.roll(self.block, shift=g, axis=tuple(range(len(g))))
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BlockPeriodicConfig)
            and self.model == other.model
            and np.array_equal(self.block, other.block)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class DilationPeriodicConfig(PeriodicConfig):
    """The configuration ``Sⁿ(ω₀)`` for a periodic or constant ``ω₀``.

    Evaluation writes ``γ = Dⁿ(η)·κ`` and reads ``Sⁿ(ω₀(η))`` at ``κ``; the
    period sublattice is ``Dⁿ`` of the period sublattice of ``ω₀``.

    Attributes:
        rule: The substitution rule.
        level: The number ``n`` of substitution steps.
        base: The configuration ``ω₀``.
    """

    rule: SubstitutionRule
    level: int
    base: PeriodicConfig

    @property
    def model(self) -> LatticeModel:
        return self.rule.model

    def _digit_index(self) -> dict[GroupElement, int]:
        key = ("digit-index", self.level)
        if key not in self.rule.cache:
            points = self.rule.digit_points(self.level)
            self.rule.cache[key] = {p: i for i, p in enumerate(points)}
        return self.rule.cache[key]

    def value(self, gamma: GroupElement) -> int:
        eta, kappa = self.model.quotient_decompose(self.level, gamma)
        letter = self.base.value(eta)
        table = self.rule.level_table(self.level)
        return int(table[letter, self._digit_index()[kappa]])

    def window_positions(self) -> list[GroupElement]:
        model = self.model
        cells = self.rule.digit_points(self.level)
        return [
            model.multiply(model.dilate(self.level, q), kappa)
            for q in self.base.window_positions()
            for kappa in cells
        ]

    @property
    def period_size(self) -> int:
        return self.base.period_size * len(self.model.seed_cells) ** self.level

    def restrict(self, points: Iterable[GroupElement]) -> Patch:
        return Patch.from_mapping({p: self.value(p) for p in points})


@dataclass(frozen=True, eq=False)
class SubstitutionDefinition:
    """Everything a definition file declares.

    Attributes:
        model: The lattice backend.
        alphabet: The alphabet.
        rule: The substitution rule.
        seeds: Declared seed configurations by name.
        name: Label of the definition, usually the file stem.
    """

    model: LatticeModel
    alphabet: Alphabet
    rule: SubstitutionRule
    seeds: dict[str, PeriodicConfig] = field(default_factory=dict)
    name: str = ""

    def seed(self, name: str) -> PeriodicConfig:
        """Look up a declared seed or the implicit ``const:<letter>`` seeds.

        Raises:
            UnknownSeed: If the name matches neither.
        """
        if name in self.seeds:
            return self.seeds[name]
        if name.startswith("const:"):
            try:
                letter = self.alphabet.index(name.split(":", 1)[1])
            except UnknownLetter:
                raise UnknownSeed(name, list(self.seeds)) from None
            return ConstantConfig(self.model, letter)
        raise UnknownSeed(name, list(self.seeds))

    def seed_names(self) -> list[str]:
        return list(self.seeds) + [f"const:{a}" for a in self.alphabet.letters]
