"""Window extraction and legal dictionaries.

A :class:`WindowExtractor` precomputes, for a source shape ``M``, a level
``n`` and a window shape ``T``, where every translate ``x·T`` sits inside
``V(n, M) ∩ Γ``. The ``T``-windows of ``Sⁿ(P)`` for any patch ``P`` on ``M``
are then one numpy gather of the expanded values.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from lattices.domain import GroupElement, LatticeModel, LatticePointSet

from .models import SubstitutionRule
from .value_objects import WindowPatch

CHUNK_ELEMENTS = 1 << 24


def locate_windows(
    model: LatticeModel, flat: Sequence[GroupElement], shape: LatticePointSet
) -> tuple[list[GroupElement], np.ndarray]:
    """Find every ``x`` with ``x·T`` inside the listed points.

    Returns:
        The positions ``x`` and an index array of shape ``(positions, |T|)``
        pointing into ``flat``.
    """
    index = {w: i for i, w in enumerate(flat)}
    anchor = model.inverse(shape.points[0])
    positions, rows = [], []
    for w in flat:
        x = model.multiply(w, anchor)
        row = []
        for t in shape:
            i = index.get(model.multiply(x, t))
            if i is None:
                break
            row.append(i)
        else:
            positions.append(x)
            rows.append(row)
    return positions, np.array(rows, dtype=np.intp).reshape(-1, len(shape))


class WindowExtractor:
    """The ``T``-windows of ``Sⁿ(P)`` for patches ``P`` on a fixed source shape.

    Attributes:
        rule: The substitution rule.
        source: The support ``M`` of the expanded patches.
        level: The number ``n`` of substitution steps.
        shape: The window shape ``T``.
        positions: Every ``x`` with ``x·T ⊆ V(n, M) ∩ Γ``.
        rows: Index array locating each window in the expanded values.
    """

    def __init__(
        self,
        rule: SubstitutionRule,
        source: LatticePointSet,
        level: int,
        shape: LatticePointSet,
    ):
        model = rule.model
        model._guard(len(source) * len(model.seed_cells) ** level)
        cells = rule.digit_points(level)
        flat = [
            model.multiply(model.dilate(level, s), p) for s in source for p in cells
        ]
        self.rule = rule
        self.source = source
        self.level = level
        self.shape = shape
        self.positions, self.rows = locate_windows(model, flat, shape)

    @classmethod
    def cached(
        cls,
        rule: SubstitutionRule,
        source: LatticePointSet,
        level: int,
        shape: LatticePointSet,
    ) -> "WindowExtractor":
        key = ("extractor", source, level, shape)
        if key not in rule.cache:
            rule.cache[key] = cls(rule, source, level, shape)
        return rule.cache[key]

    def windows(self, values: np.ndarray) -> np.ndarray:
        """Window rows of ``Sⁿ(P)`` for a batch of patches.

        Args:
            values: Array of shape ``(count, |M|)`` or ``(|M|,)``.

        Returns:
            Array of shape ``(count · positions, |T|)``, duplicates included.
        """
        batch = np.atleast_2d(np.asarray(values, dtype=np.intp))
        expanded = self.rule.level_table(self.level)[batch].reshape(len(batch), -1)
        return expanded[:, self.rows].reshape(-1, len(self.shape))

    def distinct_windows(self, values: np.ndarray) -> set[tuple[int, ...]]:
        """Distinct window rows of a batch, gathered in bounded chunks."""
        batch = np.atleast_2d(np.asarray(values, dtype=np.intp))
        per_patch = max(1, len(self.positions) * len(self.shape))
        chunk = max(1, CHUNK_ELEMENTS // per_patch)
        found: set[tuple[int, ...]] = set()
        for start in range(0, len(batch), chunk):
            found |= distinct_rows(self.windows(batch[start : start + chunk]))
        return found


def distinct_rows(rows: np.ndarray) -> set[tuple[int, ...]]:
    if rows.size == 0:
        return set()
    return {tuple(row) for row in np.unique(rows, axis=0).tolist()}


@dataclass(frozen=True)
class LegalDictionary:
    """The set ``W(S)_T`` of legal windows on one shape.

    Attributes:
        shape: The shape ``T``.
        rows: Value tuples of the legal windows.
    """

    shape: LatticePointSet
    rows: frozenset[tuple[int, ...]]

    def __contains__(self, window: object) -> bool:
        if isinstance(window, WindowPatch):
            return window.values in self.rows
        return tuple(window) in self.rows

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.patches())

    def patches(self) -> list[WindowPatch]:
        return [WindowPatch(self.shape, row) for row in sorted(self.rows)]

    @cached_property
    def array(self) -> np.ndarray:
        rows = sorted(self.rows)
        return np.array(rows, dtype=np.uint8).reshape(len(rows), len(self.shape))

    def issuperset(self, rows: Iterable[tuple[int, ...]]) -> bool:
        return self.rows.issuperset(rows)
