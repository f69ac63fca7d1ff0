"""Tests for the lattice backends."""

import itertools
import random
from fractions import Fraction

from django.test import SimpleTestCase

from lattices.domain import (
    Comparison,
    DimensionMismatch,
    HeisenbergLattice,
    InvalidGroupElement,
    LatticePointSet,
    ResourceLimitExceeded,
    ZdBlockLattice,
    build_lattice,
)

CASES = 10_000


def random_heisenberg(rng: random.Random, bound: int = 40) -> tuple[int, int, int]:
    return tuple(2 * rng.randint(-bound, bound) for _ in range(3))


def random_zd(rng: random.Random, dimension: int, bound: int = 50) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(dimension))


class HeisenbergArithmeticTest(SimpleTestCase):
    def setUp(self):
        self.model = HeisenbergLattice()

    def test_multiply_uses_twisted_center(self):
        self.assertEqual(self.model.multiply((2, 0, 0), (0, 2, 0)), (2, 2, 2))

    def test_multiply_by_identity(self):
        g = (4, -2, 6)

        self.assertEqual(self.model.multiply(g, self.model.identity), g)

    def test_inverse(self):
        self.assertEqual(self.model.inverse((2, 0, 0)), (-2, 0, 0))
        self.assertEqual(self.model.inverse((2, 2, 2)), (-2, -2, -2))

    def test_inverse_solves_product_equation(self):
        g = (2, 2, 2)
        solutions = [
            x
            for x in itertools.product(range(-4, 5, 2), repeat=3)
            if self.model.multiply(g, x) == (0, 0, 0)
        ]

        self.assertEqual(solutions, [self.model.inverse(g)])

    def test_dilate(self):
        self.assertEqual(self.model.dilate(1, (2, 0, -2)), (8, 0, -32))
        self.assertEqual(self.model.dilate(0, (2, 0, -2)), (2, 0, -2))

    def test_negative_dilation_is_rejected(self):
        with self.assertRaises(ValueError):
            self.model.dilate(-1, (2, 0, -2))

    def test_odd_coordinates_are_rejected(self):
        with self.assertRaises(InvalidGroupElement):
            self.model.validate((1, 0, 0))

    def test_wrong_length_is_rejected(self):
        with self.assertRaises(DimensionMismatch):
            self.model.validate((0, 0))

    def test_group_axioms(self):
        rng = random.Random(7)

        for _ in range(CASES):
            g, h, k = (random_heisenberg(rng) for _ in range(3))
            self.assertEqual(
                self.model.multiply(self.model.multiply(g, h), k),
                self.model.multiply(g, self.model.multiply(h, k)),
            )
            self.assertEqual(self.model.multiply(g, self.model.inverse(g)), (0, 0, 0))
            self.assertEqual(self.model.multiply(self.model.identity, g), g)

    def test_dilation_is_automorphism_and_scales_metric(self):
        rng = random.Random(11)

        for _ in range(CASES):
            g, h = random_heisenberg(rng, 10), random_heisenberg(rng, 10)
            r = Fraction(rng.randint(1, 60), rng.randint(1, 6))
            self.assertEqual(
                self.model.dilate(1, self.model.multiply(g, h)),
                self.model.multiply(self.model.dilate(1, g), self.model.dilate(1, h)),
            )
            self.assertEqual(
                self.model.metric_compare(
                    self.model.dilate(1, g), self.model.dilate(1, h), 4 * r
                ),
                self.model.metric_compare(g, h, r),
            )


class HeisenbergGeometryTest(SimpleTestCase):
    def setUp(self):
        self.model = HeisenbergLattice()

    def test_constants(self):
        self.assertEqual(self.model.stretch, 4)
        self.assertEqual(self.model.r_minus, 1)
        self.assertEqual(self.model.r_plus, Fraction(3, 2))
        self.assertEqual(self.model.c_minus, Fraction(3, 8))
        self.assertEqual(self.model.shift, 0)
        self.assertEqual(self.model.c_plus, 2)

    def test_metric_compare_is_exact(self):
        self.assertEqual(
            self.model.metric_compare((0, 0, 0), (0, 0, 2), Fraction(3, 2)),
            Comparison.LT,
        )
        self.assertEqual(
            self.model.metric_compare((0, 0, 0), (2, 0, 0), 2), Comparison.GEQ
        )

    def test_distance_to_self_is_small(self):
        self.assertEqual(
            self.model.metric_compare((2, 4, 6), (2, 4, 6), Fraction(1, 10**6)),
            Comparison.LT,
        )

    def test_unit_ball(self):
        self.assertEqual(
            self.model.ball_points((0, 0, 0), 1), LatticePointSet.of([(0, 0, 0)])
        )

    def test_ball_matches_brute_force(self):
        r = Fraction(5, 2)
        expected = [
            p
            for p in itertools.product(
                range(-4, 5, 2), range(-4, 5, 2), range(-8, 9, 2)
            )
            if self.model.norm4(p) * 16 < 625
        ]

        self.assertEqual(
            self.model.ball_points((0, 0, 0), r), LatticePointSet.of(expected)
        )

    def test_ball_is_left_invariant(self):
        g = (6, -2, 10)
        ball = self.model.ball_points((0, 0, 0), 3)

        translated = self.model.ball_points(g, 3)

        self.assertEqual(
            translated, LatticePointSet.of(self.model.translate(g, ball))
        )

    def test_seed_cells(self):
        cells = self.model.seed_cells

        self.assertEqual(len(cells), 256)
        self.assertEqual(
            cells,
            LatticePointSet.of(
                itertools.product((-4, -2, 0, 2), (-4, -2, 0, 2), range(-16, 15, 2))
            ),
        )

    def test_radii_bracket_fundamental_domain(self):
        box = itertools.product(range(-1, 1), repeat=3)
        corners = itertools.product((-1, 1), repeat=3)

        self.assertTrue(all(self.model.in_fundamental_domain(p) for p in box))
        self.assertTrue(
            all(self.model.norm4(p) < self.model.r_plus**4 for p in corners)
        )

    def test_support_of_identity(self):
        self.assertEqual(self.model.support(1, [(0, 0, 0)]), self.model.seed_cells)

    def test_support_cardinality(self):
        self.assertEqual(len(self.model.support(2, [(0, 0, 0)])), 256**2)

    def test_support_composition(self):
        base = [(0, 0, 0), (2, 0, 0)]

        self.assertEqual(
            self.model.support(2, base),
            self.model.support(1, self.model.support(1, base)),
        )

    def test_support_equivariance(self):
        g = (2, -2, 4)

        self.assertEqual(
            self.model.support(1, [g]),
            LatticePointSet.of(
                self.model.translate(
                    self.model.dilate(1, g), self.model.support(1, [(0, 0, 0)])
                )
            ),
        )

    def test_c_plus_bounds_supports(self):
        for n in (1, 2):
            radius = self.model.c_plus * 4**n
            self.assertTrue(
                all(
                    self.model.within((0, 0, 0), p, radius)
                    for p in self.model.support(n, [(0, 0, 0)])
                )
            )

    def test_support_cap(self):
        model = HeisenbergLattice(point_cap=1000)

        with self.assertRaises(ResourceLimitExceeded):
            model.support(2, [(0, 0, 0)])

    def test_quotient_of_support_point(self):
        point = (2, -4, 14)

        self.assertEqual(self.model.quotient_decompose(1, point), ((0, 0, 0), point))

    def test_quotient_of_dilated_point(self):
        eta = (2, 4, -6)

        self.assertEqual(
            self.model.quotient_decompose(2, self.model.dilate(2, eta)),
            (eta, (0, 0, 0)),
        )

    def test_quotient_round_trip(self):
        rng = random.Random(3)
        level_two = self.model.support(2, [(0, 0, 0)])

        for _ in range(CASES):
            gamma = random_heisenberg(rng, 200)
            n = rng.choice((1, 2))
            eta, kappa = self.model.quotient_decompose(n, gamma)
            self.assertEqual(
                self.model.multiply(self.model.dilate(n, eta), kappa), gamma
            )
            if n == 1:
                self.assertIn(kappa, self.model.seed_cells)
            else:
                self.assertIn(kappa, level_two)

    def test_quotient_is_bijective_on_a_box(self):
        box = list(
            itertools.product(
                range(-16, 16, 2), range(-16, 16, 2), range(-64, 64, 2)
            )
        )

        pairs = {self.model.quotient_decompose(1, g) for g in box}

        self.assertEqual(len(pairs), len(box))


class ZdArithmeticTest(SimpleTestCase):
    def setUp(self):
        self.model = ZdBlockLattice((2, 2))

    def test_multiply_adds(self):
        self.assertEqual(self.model.multiply((1, 2), (3, -1)), (4, 1))

    def test_inverse_negates(self):
        self.assertEqual(self.model.inverse((1, -3)), (-1, 3))

    def test_dilate(self):
        self.assertEqual(self.model.dilate(2, (1, -1)), (4, -4))

    def test_negative_dilation_is_rejected(self):
        with self.assertRaises(ValueError):
            self.model.dilate(-1, (1, -1))

    def test_length_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            self.model.multiply((1, 2), (1, 2, 3))

    def test_constants(self):
        self.assertEqual(self.model.stretch, 2)
        self.assertEqual(self.model.c_minus, 1)
        self.assertEqual(self.model.shift, 4)
        self.assertEqual(self.model.c_plus, 2)

    def test_anisotropic_stretch_is_smallest_block(self):
        model = ZdBlockLattice((3, 2, 4))

        self.assertEqual(model.stretch, 2)
        self.assertEqual(model.c_minus, 1)

    def test_max_metric(self):
        self.assertEqual(
            self.model.metric_compare((0, 0), (1, 1), 1), Comparison.GEQ
        )
        self.assertEqual(
            self.model.metric_compare((0, 0), (1, 1), Fraction(3, 2)), Comparison.LT
        )

    def test_anisotropic_metric(self):
        model = ZdBlockLattice((2, 4))

        # Along the second axis the radius r stretches to r².
        self.assertEqual(model.metric_compare((0, 0), (0, 3), 2), Comparison.LT)
        self.assertEqual(model.metric_compare((0, 0), (0, 4), 2), Comparison.GEQ)

    def test_ball(self):
        self.assertEqual(
            self.model.ball_points((0, 0), Fraction(3, 2)),
            LatticePointSet.of(itertools.product((-1, 0, 1), repeat=2)),
        )

    def test_ball_cardinality_is_translation_invariant(self):
        self.assertEqual(
            len(self.model.ball_points((5, -7), 3)),
            len(self.model.ball_points((0, 0), 3)),
        )

    def test_group_axioms_and_scaling(self):
        rng = random.Random(5)

        for _ in range(CASES):
            g, h, k = (random_zd(rng, 2) for _ in range(3))
            r = Fraction(rng.randint(1, 80), rng.randint(1, 5))
            self.assertEqual(
                self.model.multiply(self.model.multiply(g, h), k),
                self.model.multiply(g, self.model.multiply(h, k)),
            )
            self.assertEqual(self.model.multiply(g, self.model.inverse(g)), (0, 0))
            self.assertEqual(
                self.model.metric_compare(
                    self.model.dilate(1, g), self.model.dilate(1, h), 2 * r
                ),
                self.model.metric_compare(g, h, r),
            )


class ZdGeometryTest(SimpleTestCase):
    def test_seed_cells_plane(self):
        model = ZdBlockLattice((2, 2))

        self.assertEqual(
            model.seed_cells, LatticePointSet.of(itertools.product((-1, 0), repeat=2))
        )

    def test_seed_cells_mixed_blocks(self):
        model = ZdBlockLattice((2, 3, 2))

        self.assertEqual(len(model.seed_cells), 12)
        self.assertEqual(
            model.seed_cells.bounding_box(), ((-1, 0), (-1, 1), (-1, 0))
        )

    def test_support_cardinality_and_composition(self):
        model = ZdBlockLattice((2, 3))

        for n in range(4):
            self.assertEqual(len(model.support(n, [(0, 0)])), 6**n)
        self.assertEqual(
            model.support(3, [(0, 0), (1, 0)]),
            model.support(1, model.support(2, [(0, 0), (1, 0)])),
        )

    def test_support_is_monotone(self):
        model = ZdBlockLattice((2, 2))
        small = [(0, 0)]
        large = [(0, 0), (1, 1)]

        self.assertTrue(model.support(2, small).issubset(model.support(2, large)))

    def test_support_interval_matches_enumeration(self):
        model = ZdBlockLattice((3,))

        start, stop = model.support_interval(3, 0)

        self.assertEqual(
            model.support(3, [(0,)]),
            LatticePointSet.of((c,) for c in range(start, stop)),
        )

    def test_c_plus_bounds_supports(self):
        model = ZdBlockLattice((2, 2))

        for n in range(1, 5):
            radius = model.c_plus * 2**n
            self.assertTrue(
                all(model.within((0, 0), p, radius) for p in model.support(n, [(0, 0)]))
            )

    def test_quotient_round_trip(self):
        model = ZdBlockLattice((2, 3))
        rng = random.Random(13)

        for _ in range(CASES):
            gamma = random_zd(rng, 2, 500)
            n = rng.randint(1, 3)
            eta, kappa = model.quotient_decompose(n, gamma)
            self.assertEqual(model.multiply(model.dilate(n, eta), kappa), gamma)
            self.assertTrue(model.in_support(n, kappa))

    def test_preimage_ball_is_exact(self):
        model = ZdBlockLattice((2, 2))

        found = model.preimage_ball(1, (3, 0), 1)

        # Points g with |3/2 - g_1| < 1 and |g_2| < 1.
        self.assertEqual(sorted(found), [(1, 0), (2, 0)])

    def test_covering_level(self):
        model = ZdBlockLattice((2, 2))

        self.assertEqual(model.covering_level((2, 2)), 0)
        self.assertEqual(model.covering_level((3, 2)), 1)
        self.assertEqual(model.covering_level((31, 31)), 5)


class BuildLatticeTest(SimpleTestCase):
    def test_build_zd(self):
        self.assertEqual(build_lattice("zd-block", m=[2, 2]), ZdBlockLattice((2, 2)))

    def test_build_heisenberg(self):
        self.assertEqual(build_lattice("heisenberg3"), HeisenbergLattice(4))

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            build_lattice("hyperbolic")

    def test_block_sizes_must_exceed_one(self):
        with self.assertRaises(ValueError):
            ZdBlockLattice((1, 2))

    def test_heisenberg_stretch_starts_at_three(self):
        self.assertEqual(HeisenbergLattice(3).stretch, 3)
        with self.assertRaises(ValueError):
            HeisenbergLattice(2)
