"""Lattice backends with dilation structure.

A backend bundles the group law on integer coordinates, the homogeneous
metric, the dilation automorphisms and the fundamental domain ``V`` of a
lattice ``Γ``. Two backends are provided: block lattices ``ℤᵈ`` with the
anisotropic metric defined by a block size vector, and the even Heisenberg
lattice ``H₃(2ℤ)`` with the Cygan-Korányi metric.

All set membership decisions are made with integer or rational arithmetic.
The only exception is the anisotropic ``ℤᵈ`` metric with unequal block sizes,
whose radii are evaluated in extended precision behind a guard band.
"""

import itertools
import math
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from core.conf import aperiodiq_setting

from .exceptions import (
    DimensionMismatch,
    InvalidGroupElement,
    InvariantViolation,
    ResourceLimitExceeded,
)
from .value_objects import Comparison, GroupElement, LatticePointSet

Radius = Fraction | int


def _check_level(n: int) -> None:
    if n < 0:
        raise ValueError(f"Dilation level must be nonnegative, got {n}")


def _as_fraction(r: Radius | float) -> Fraction:
    value = Fraction(r)
    if value <= 0:
        raise ValueError(f"Radius must be positive, got {r}")
    return value


class LatticeModel(ABC):
    """A lattice with a dilation datum.

    Attributes:
        kind: Backend identifier used in definition files.
        dimension: Number of coordinates of a group element.
        stretch: The integer stretch factor λ₀ of one substitution step.
        r_minus: Radius of a ball around the identity inside ``V``.
        r_plus: Radius of a ball around the identity containing ``V̄``.
        c_minus: The sufficiency constant of the backend.
        shift: The sufficiency shift ``s`` of the backend.
    """

    kind: str
    dimension: int
    stretch: int
    r_minus: Fraction
    r_plus: Fraction
    c_minus: Fraction
    shift: int

    def __init__(self, point_cap: int | None = None):
        self._point_cap = point_cap

    # Group structure

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.dimension

    def validate(self, g: Sequence[int]) -> GroupElement:
        """Check that coordinates describe a lattice point and return the tuple.

        Raises:
            DimensionMismatch: If the coordinate count is wrong.
            InvalidGroupElement: If a coordinate is not an admissible integer.
        """
        coords = tuple(g)
        if len(coords) != self.dimension:
            raise DimensionMismatch(self.dimension, len(coords))
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
                raise InvalidGroupElement(coords, "coordinates must be integers")
        coords = tuple(int(c) for c in coords)
        self._check_coords(coords)
        return coords

    def _check_coords(self, coords: GroupElement) -> None:
        pass

    def _check_pair(self, g: GroupElement, h: GroupElement) -> None:
        if len(g) != self.dimension:
            raise DimensionMismatch(self.dimension, len(g))
        if len(h) != self.dimension:
            raise DimensionMismatch(self.dimension, len(h))

    @abstractmethod
    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Return the product ``g·h``."""

    def inverse(self, g: GroupElement) -> GroupElement:
        # Both backends use exponential coordinates, where inversion negates.
        return tuple(-c for c in g)

    @abstractmethod
    def dilate(self, n: int, g: GroupElement) -> GroupElement:
        """Apply the n-th power of the stretch dilation to ``g``."""

    def translate(self, g: GroupElement, points: Iterable[GroupElement]) -> list:
        """Left-translate every point by ``g``."""
        return [self.multiply(g, p) for p in points]

    # Metric

    @abstractmethod
    def within(self, g: GroupElement, h: GroupElement, r: Radius) -> bool:
        """Decide ``d(g, h) < r``."""

    def metric_compare(
        self, g: GroupElement, h: GroupElement, r: Radius
    ) -> Comparison:
        """Compare the distance ``d(g, h)`` with the radius ``r``.

        Args:
            g: First lattice point.
            h: Second lattice point.
            r: A positive rational radius.

        Returns:
            ``Comparison.LT`` if ``d(g, h) < r``, otherwise ``Comparison.GEQ``.
        """
        self._check_pair(g, h)
        return Comparison.LT if self.within(g, h, _as_fraction(r)) else Comparison.GEQ

    @abstractmethod
    def distance_key(self, g: GroupElement, h: GroupElement) -> float | int:
        """A value that orders pairs by their distance ``d(g, h)``."""

    @abstractmethod
    def norm_upper_bound(self, g: GroupElement) -> Fraction:
        """A rational number not smaller than ``d(e, g)``."""

    @property
    @abstractmethod
    def closure_radius(self) -> float:
        """The supremum of ``d(e, v)`` over the closure of ``V``."""

    @property
    def c_plus(self) -> Fraction:
        """Outer growth constant with ``V(n) ⊆ B(e, λ₀ⁿ·C_plus)``."""
        return self.r_plus * self.stretch / (self.stretch - 1)

    # Fundamental domain and digit structure

    @property
    @abstractmethod
    def fundamental_box(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Half-open coordinate box describing ``V``."""

    def in_fundamental_domain(self, point: Sequence[Fraction | int]) -> bool:
        return all(lo <= c < hi for c, (lo, hi) in zip(point, self.fundamental_box))

    @abstractmethod
    def _seed_points(self) -> Iterable[GroupElement]:
        pass

    @cached_property
    def seed_cells(self) -> LatticePointSet:
        """The cells ``K = D[V] ∩ Γ`` of one substitution step of a letter."""
        return LatticePointSet.of(self._seed_points())

    @abstractmethod
    def split(self, w: GroupElement) -> tuple[GroupElement, GroupElement]:
        """Write ``w = D(η)·κ`` with ``κ`` in the seed cells.

        Returns:
            The pair ``(η, κ)``.
        """

    # Enumeration

    @property
    def point_cap(self) -> int:
        if self._point_cap is not None:
            return self._point_cap
        return int(aperiodiq_setting("POINT_CAP"))

    def _guard(self, count: int, cap: int | None = None) -> None:
        limit = self.point_cap if cap is None else cap
        if count > limit:
            raise ResourceLimitExceeded(count, limit)

    def support(
        self, n: int, points: Iterable[GroupElement] | LatticePointSet, cap=None
    ) -> LatticePointSet:
        """The support ``V(n, M) ∩ Γ`` of the n-fold substitute of a patch on M.

        Computed by the recursion ``L(0, M) = M`` and
        ``L(n, M) = {D(γ)·κ : γ ∈ L(n-1, M), κ ∈ K}``.

        Args:
            n: Number of substitution steps, at least 0.
            points: The nonempty base set ``M``.
            cap: Optional point cap overriding the configured one.

        Raises:
            ValueError: If ``n`` is negative or ``M`` is empty.
            ResourceLimitExceeded: If the result would exceed the cap.
        """
        if n < 0:
            raise ValueError(f"Level must be nonnegative, got {n}")
        current = list(dict.fromkeys(points))
        if not current:
            raise ValueError("Support of an empty point set is undefined")
        self._guard(len(current) * len(self.seed_cells) ** n, cap)
        cells = self.seed_cells.points
        for _ in range(n):
            current = [
                self.multiply(self.dilate(1, gamma), kappa)
                for gamma in current
                for kappa in cells
            ]
        return LatticePointSet(tuple(current))

    def quotient_decompose(
        self, n: int, gamma: GroupElement
    ) -> tuple[GroupElement, GroupElement]:
        """Write ``γ = Dⁿ(η)·κ`` with ``κ ∈ V(n) ∩ Γ``.

        The decomposition composes ``n`` digit splits; the result is checked
        against the outer radius bound ``d(Dⁿ(η), γ) < λ₀ⁿ·C_plus``.

        Raises:
            InvariantViolation: If the decomposition leaves the outer ball.
        """
        if n < 0:
            raise ValueError(f"Level must be nonnegative, got {n}")
        eta = gamma
        for _ in range(n):
            eta, _ = self.split(eta)
        kappa = self.multiply(self.inverse(self.dilate(n, eta)), gamma)
        if n and not self.within(
            self.dilate(n, eta), gamma, self.c_plus * self.stretch**n
        ):
            raise InvariantViolation(
                f"{gamma} decomposes outside the C_plus ball at level {n}"
            )
        return eta, kappa

    def quotient(self, n: int, gamma: GroupElement) -> GroupElement:
        """The ``η`` part of :meth:`quotient_decompose` without the radius check."""
        for _ in range(n):
            gamma, _ = self.split(gamma)
        return gamma

    def in_support(self, n: int, w: GroupElement) -> bool:
        """Membership of ``w`` in ``V(n) ∩ Γ``."""
        return self.quotient(n, w) == self.identity

    def preimage_ball(
        self, n: int, x: GroupElement, r: Radius, cap: int | None = None
    ) -> list[GroupElement]:
        """Lattice points ``g`` with ``d(D⁻ⁿ(x), g) < r``.

        Uses ``d(D⁻ⁿ(x), g) = λ₀⁻ⁿ·d(x, Dⁿ(g))`` so the test stays exact.
        Points are returned nearest first.

        Raises:
            ResourceLimitExceeded: If the candidate box exceeds the cap.
        """
        radius = _as_fraction(r)
        scaled = radius * self.stretch**n
        ranges = self._preimage_ranges(n, x, radius)
        self._guard(math.prod(len(axis) for axis in ranges), cap)
        found = []
        for g in itertools.product(*ranges):
            image = self.dilate(n, g)
            if self.within(x, image, scaled):
                found.append((self.distance_key(x, image), g))
        found.sort()
        return [g for _, g in found]

    @abstractmethod
    def _preimage_ranges(
        self, n: int, x: GroupElement, r: Fraction
    ) -> list[Sequence[int]]:
        pass

    def ball_points(
        self, center: GroupElement, r: Radius, cap: int | None = None
    ) -> LatticePointSet:
        """All lattice points at distance less than ``r`` from ``center``."""
        return LatticePointSet(tuple(self.preimage_ball(0, center, r, cap)))

    # Backend-provided constructions

    @property
    def testing_constant(self) -> Fraction | None:
        """The constant ``C_T`` of :meth:`testing_tuple`, when known."""
        return None

    @abstractmethod
    def testing_tuple(self) -> tuple[LatticePointSet, int] | None:
        """A small testing domain with its self-covering step, if known."""

    def declared_witness(self) -> tuple[GroupElement, int, Fraction] | None:
        """A ball ``B(z, r) ⊆ V(s)`` for the second sufficiency branch."""
        return None

    @abstractmethod
    def describe(self) -> dict:
        """Parameters identifying the backend, for serialization."""

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LatticeModel) and self.describe() == other.describe()

    def __hash__(self) -> int:
        return hash(repr(sorted(self.describe().items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


class ZdBlockLattice(LatticeModel):
    """The lattice ℤᵈ with block dilation ``x ↦ (m₁x₁, …, m_dx_d)``.

    The metric is ``d(x, y) = max_j |x_j - y_j|^{1/α_j}`` with
    ``α_j = log m_j / log λ₀`` and ``λ₀ = min_j m_j``; the fundamental domain
    is ``[-½, ½)ᵈ``.

    Attributes:
        blocks: The block sizes ``m_j``.
    """

    kind = "zd-block"

    def __init__(self, blocks: Sequence[int], point_cap: int | None = None):
        super().__init__(point_cap)
        blocks = tuple(int(m) for m in blocks)
        if not blocks:
            raise ValueError("A block lattice needs at least one axis")
        if any(m < 2 for m in blocks):
            raise ValueError(f"Block sizes must be at least 2, got {blocks}")
        self.blocks = blocks
        self.dimension = len(blocks)
        self.stretch = min(blocks)
        self.exponents = tuple(math.log(m) / math.log(self.stretch) for m in blocks)
        self.r_minus = Fraction(1, 2)
        self.r_plus = Fraction(1)
        self.c_minus = Fraction(2 * self.stretch - 3)
        self.shift = 4
        self._low = tuple(-(m // 2) for m in blocks)

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        if len(g) != len(h):
            raise DimensionMismatch(len(g), len(h))
        return tuple(a + b for a, b in zip(g, h))

    def dilate(self, n: int, g: GroupElement) -> GroupElement:
        _check_level(n)
        if n == 0:
            return tuple(g)
        return tuple(m**n * c for m, c in zip(self.blocks, g))

    def _isotropic(self, axis: int) -> bool:
        return self.blocks[axis] == self.stretch

    def _axis_bound(self, r: Fraction, axis: int) -> np.longdouble:
        exponent = np.longdouble(np.log(np.longdouble(self.blocks[axis]))) / np.log(
            np.longdouble(self.stretch)
        )
        base = np.longdouble(r.numerator) / np.longdouble(r.denominator)
        return np.power(base, exponent)

    def within(self, g: GroupElement, h: GroupElement, r: Radius) -> bool:
        r = Fraction(r)
        guard = float(aperiodiq_setting("METRIC_GUARD"))
        for axis, (a, b) in enumerate(zip(g, h)):
            delta = abs(a - b)
            if self._isotropic(axis):
                if not delta < r:
                    return False
            elif not delta < self._axis_bound(r, axis) * (1 - np.longdouble(guard)):
                return False
        return True

    def distance_key(self, g: GroupElement, h: GroupElement) -> float:
        return max(
            abs(a - b) ** (1 / alpha) for a, b, alpha in zip(g, h, self.exponents)
        )

    def norm_upper_bound(self, g: GroupElement) -> Fraction:
        if all(self._isotropic(axis) for axis in range(self.dimension)):
            return Fraction(max(abs(c) for c in g))
        return Fraction(math.floor(self.distance_key(self.identity, g)) + 1)

    @property
    def closure_radius(self) -> float:
        return max(0.5 ** (1 / alpha) for alpha in self.exponents)

    @property
    def fundamental_box(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((Fraction(-1, 2), Fraction(1, 2)) for _ in self.blocks)

    def _seed_points(self) -> Iterable[GroupElement]:
        return itertools.product(
            *(range(lo, lo + m) for lo, m in zip(self._low, self.blocks))
        )

    def split(self, w: GroupElement) -> tuple[GroupElement, GroupElement]:
        eta = tuple((c - lo) // m for c, lo, m in zip(w, self._low, self.blocks))
        kappa = tuple(c - m * e for c, m, e in zip(w, self.blocks, eta))
        return eta, kappa

    def support_interval(self, n: int, axis: int) -> tuple[int, int]:
        """The half-open coordinate range of ``V(n) ∩ ℤᵈ`` along one axis."""
        m, lo = self.blocks[axis], self._low[axis]
        start = lo * (m**n - 1) // (m - 1)
        return start, start + m**n

    def _preimage_ranges(
        self, n: int, x: GroupElement, r: Fraction
    ) -> list[Sequence[int]]:
        ranges = []
        for axis, (c, m) in enumerate(zip(x, self.blocks)):
            reach = float(self._axis_bound(r, axis)) + 1
            centre = c / m**n
            low, high = math.floor(centre - reach), math.ceil(centre + reach)
            ranges.append(range(low, high + 1))
        return ranges

    def testing_tuple(self) -> tuple[LatticePointSet, int]:
        return LatticePointSet.of(itertools.product((0, 1), repeat=self.dimension)), 1

    @property
    def testing_constant(self) -> Fraction:
        """The constant ``C_T = 2λ₀`` of the unit-cube testing domain."""
        return Fraction(2 * self.stretch)

    def covering_level(self, extents: Sequence[int]) -> int:
        """Least ``n`` at which every translate of a box fits in an n-supertile.

        A box with side lengths ``w_j`` lies in some translate ``Dⁿ(γ)V(n,T)``
        of the unit-cube support for every position iff ``w_j ≤ m_jⁿ + 1`` on
        every axis.
        """
        n = 0
        while any(w > m**n + 1 for w, m in zip(extents, self.blocks)):
            n += 1
        return n

    def declared_witness(self) -> tuple[GroupElement, int, Fraction]:
        s = 4
        centre = []
        for axis, m in enumerate(self.blocks):
            start, _ = self.support_interval(s, axis)
            centre.append(start + (m**s - 1) // 2)
        return tuple(centre), s, Fraction(2 * self.stretch)

    def describe(self) -> dict:
        return {"kind": self.kind, "m": list(self.blocks)}


class HeisenbergLattice(LatticeModel):
    """The even discrete Heisenberg group ``H₃(2ℤ)``.

    Multiplication is ``(x,y,z)(a,b,c) = (x+a, y+b, z+c+½(xb-ay))``, the metric
    is induced by the Cygan-Korányi norm ``((x²+y²)² + z²)^{1/4}`` and the
    dilation is ``(x,y,z) ↦ (λx, λy, λ²z)``. The fundamental domain is the
    coordinate box ``[-1, 1)³``; membership of ``γ⁻¹g`` in ``γV`` is tested
    coordinatewise.
    """

    kind = "heisenberg3"
    dimension = 3

    def __init__(self, stretch: int = 4, point_cap: int | None = None):
        super().__init__(point_cap)
        stretch = int(stretch)
        if stretch < 3:
            raise ValueError(
                f"Heisenberg stretch must be at least 3 for the box [-1,1)^3, "
                f"got {stretch}"
            )
        self.stretch = stretch
        self.r_minus = Fraction(1)
        self.r_plus = Fraction(3, 2)
        self.c_minus = (self.r_minus / stretch) * (
            stretch - (1 + self.r_plus / self.r_minus)
        )
        self.shift = 0

    def _check_coords(self, coords: GroupElement) -> None:
        if any(c % 2 for c in coords):
            raise InvalidGroupElement(coords, "Heisenberg coordinates must be even")

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        if len(g) != 3 or len(h) != 3:
            raise DimensionMismatch(3, len(h) if len(g) == 3 else len(g))
        x, y, z = g
        a, b, c = h
        return (x + a, y + b, z + c + (x * b - y * a) // 2)

    def dilate(self, n: int, g: GroupElement) -> GroupElement:
        _check_level(n)
        scale = self.stretch**n
        x, y, z = g
        return (scale * x, scale * y, scale * scale * z)

    @staticmethod
    def norm4(g: GroupElement) -> int:
        """The fourth power of the Cygan-Korányi norm."""
        x, y, z = g
        return (x * x + y * y) ** 2 + z * z

    def within(self, g: GroupElement, h: GroupElement, r: Radius) -> bool:
        r = Fraction(r)
        q = self.norm4(self.multiply(self.inverse(g), h))
        return q * r.denominator**4 < r.numerator**4

    def distance_key(self, g: GroupElement, h: GroupElement) -> int:
        return self.norm4(self.multiply(self.inverse(g), h))

    def norm_upper_bound(self, g: GroupElement) -> Fraction:
        q = self.norm4(g)
        root = math.isqrt(math.isqrt(q))
        while root**4 <= q:
            root += 1
        return Fraction(root)

    @property
    def closure_radius(self) -> float:
        return 5**0.25

    @property
    def fundamental_box(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return ((Fraction(-1), Fraction(1)),) * 3

    def _seed_points(self) -> Iterable[GroupElement]:
        lam = self.stretch
        planar = [c for c in range(-lam, lam) if c % 2 == 0]
        vertical = [c for c in range(-lam * lam, lam * lam) if c % 2 == 0]
        return itertools.product(planar, planar, vertical)

    def split(self, w: GroupElement) -> tuple[GroupElement, GroupElement]:
        lam = self.stretch
        wx, wy, wz = w
        a = 2 * lam * ((wx + lam) // (2 * lam))
        b = 2 * lam * ((wy + lam) // (2 * lam))
        twist = (b * wx - a * wy) // 2
        c = 2 * lam * lam * ((wz + twist + lam * lam) // (2 * lam * lam))
        eta = (a // lam, b // lam, c // (lam * lam))
        kappa = (wx - a, wy - b, wz - c + twist)
        return eta, kappa

    def _preimage_ranges(
        self, n: int, x: GroupElement, r: Fraction
    ) -> list[Sequence[int]]:
        scale = self.stretch**n
        reach = float(r) * scale + 1
        xx, xy, xz = x
        vertical = reach * reach + 0.5 * (abs(xx) + abs(xy)) * reach + 1

        def evens(lo: float, hi: float) -> range:
            start = math.floor(lo)
            start += start % 2
            return range(start, math.ceil(hi) + 1, 2)

        return [
            evens((xx - reach) / scale, (xx + reach) / scale),
            evens((xy - reach) / scale, (xy + reach) / scale),
            evens((xz - vertical) / scale**2, (xz + vertical) / scale**2),
        ]

    def testing_tuple(self) -> tuple[LatticePointSet, int] | None:
        if self.stretch != 4:
            return None
        return (
            LatticePointSet.of(
                itertools.product((-2, 0), (-2, 0), range(-6, 7, 2))
            ),
            1,
        )

    def describe(self) -> dict:
        return {"kind": self.kind, "stretch": self.stretch}


def build_lattice(kind: str, **params) -> LatticeModel:
    """Construct a backend from its identifier and parameters.

    Args:
        kind: ``"zd-block"`` or ``"heisenberg3"``.
        **params: ``m`` for block lattices, optional ``stretch`` for
            Heisenberg, optional ``point_cap`` for both.

    Raises:
        ValueError: If the kind is unknown or parameters are invalid.
    """
    cap = params.pop("point_cap", None)
    if kind == ZdBlockLattice.kind:
        return ZdBlockLattice(params["m"], point_cap=cap)
    if kind == HeisenbergLattice.kind:
        return HeisenbergLattice(params.get("stretch", 4), point_cap=cap)
    raise ValueError(f"Unknown lattice kind: {kind}")
