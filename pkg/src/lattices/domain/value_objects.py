"""Value objects for the lattice domain.

Group elements are plain tuples of Python integers so they hash and compare
fast inside the large point sets the algorithms build; the backend decides
which tuples are valid lattice points.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, TypeAlias

GroupElement: TypeAlias = tuple[int, ...]


class Comparison(Enum):
    """Outcome of comparing a distance with a radius."""

    LT = "lt"
    GEQ = "geq"


@dataclass(frozen=True)
class LatticePointSet:
    """A finite, duplicate-free, ordered set of lattice points.

    The points are kept in lexicographic order so two sets holding the same
    elements are equal and enumerate identically. This fixed enumeration is
    what window patches index their values by.

    Attributes:
        points: The sorted points.
    """

    points: tuple[GroupElement, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.points)))
        if ordered != self.points:
            object.__setattr__(self, "points", ordered)

    @classmethod
    def of(cls, points: Iterable[GroupElement]) -> "LatticePointSet":
        """Build a point set from any iterable of coordinate tuples."""
        return cls(tuple(tuple(p) for p in points))

    @cached_property
    def members(self) -> frozenset[GroupElement]:
        return frozenset(self.points)

    @cached_property
    def index(self) -> dict[GroupElement, int]:
        """Position of every point in the fixed enumeration."""
        return {p: i for i, p in enumerate(self.points)}

    def __contains__(self, point: object) -> bool:
        return point in self.members

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __bool__(self) -> bool:
        return bool(self.points)

    def issubset(self, other: "LatticePointSet") -> bool:
        return self.members <= other.members

    def union(self, other: "LatticePointSet") -> "LatticePointSet":
        return LatticePointSet(self.points + other.points)

    def without(self, removed: Iterable[GroupElement]) -> "LatticePointSet":
        dropped = set(removed)
        return LatticePointSet(tuple(p for p in self.points if p not in dropped))

    def bounding_box(self) -> tuple[tuple[int, int], ...]:
        """Per-axis (min, max) of the coordinates."""
        if not self.points:
            return ()
        return tuple(
            (min(axis), max(axis)) for axis in zip(*self.points, strict=True)
        )

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.points]
