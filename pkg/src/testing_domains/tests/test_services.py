"""Tests for sufficiency witnesses, canonical domains and covering checks."""

import itertools
from fractions import Fraction

from django.test import SimpleTestCase

from lattices.domain import HeisenbergLattice, LatticePointSet, ZdBlockLattice
from testing_domains.domain import (
    VerificationFailed,
    canonical_domain,
    reduce_domain,
    sufficiency_witness,
    verify_domain,
)


def heisenberg_box(z_bound: int) -> LatticePointSet:
    return LatticePointSet.of(
        itertools.product((-2, 0), (-2, 0), range(-z_bound, z_bound + 1, 2))
    )


def cube(lo: int, hi: int, dimension: int) -> LatticePointSet:
    return LatticePointSet.of(itertools.product(range(lo, hi + 1), repeat=dimension))


class UndeclaredBlockLattice(ZdBlockLattice):
    def declared_witness(self):
        return None


class SufficiencyWitnessTest(SimpleTestCase):
    def test_heisenberg_uses_identity_ball(self):
        witness = sufficiency_witness(HeisenbergLattice())

        self.assertEqual(witness.branch, "a")
        self.assertEqual(witness.c_minus, Fraction(3, 8))
        self.assertEqual(witness.shift, 0)
        self.assertEqual(witness.centre, (0, 0, 0))

    def test_block_lattice_uses_shifted_ball(self):
        witness = sufficiency_witness(ZdBlockLattice((2, 2)))

        self.assertEqual(witness.branch, "b")
        self.assertEqual(witness.shift, 4)
        self.assertEqual(witness.c_minus, Fraction(1))
        self.assertEqual(witness.centre, (-8, -8))

    def test_block_lattice_constant_is_two_stretch_minus_three(self):
        witness = sufficiency_witness(ZdBlockLattice((3,)))

        self.assertEqual(witness.shift, 4)
        self.assertEqual(witness.c_minus, Fraction(3))

    def test_large_stretch_keeps_declared_ball(self):
        witness = sufficiency_witness(ZdBlockLattice((100,)))

        self.assertEqual(witness.branch, "b")
        self.assertEqual(witness.shift, 4)
        self.assertEqual(witness.c_minus, Fraction(197))

    def test_quaternary_plane_is_two_stretch_minus_three(self):
        model = ZdBlockLattice((4, 4))

        witness = sufficiency_witness(model)

        self.assertEqual(witness.branch, "b")
        self.assertEqual((witness.c_minus, witness.shift), (Fraction(5), 4))
        self.assertTrue(witness.holds(model))

    def test_identity_ball_without_declared_ball(self):
        witness = sufficiency_witness(UndeclaredBlockLattice((100,)))

        self.assertEqual(witness.branch, "a")
        self.assertEqual(witness.c_minus, Fraction(97, 200))
        self.assertLess(Fraction(1, 2) - witness.c_minus, Fraction(1, 50))

    def test_searched_ball_near_centroid(self):
        witness = sufficiency_witness(UndeclaredBlockLattice((2,)))

        self.assertEqual(witness.branch, "b")
        self.assertEqual(witness.shift, 3)
        self.assertEqual(witness.centre, (-4,))
        self.assertEqual(witness.c_minus, Fraction(1))

    def test_witnesses_revalidate(self):
        models = (HeisenbergLattice(), ZdBlockLattice((2, 2)), ZdBlockLattice((3,)))
        for model in models:
            witness = sufficiency_witness(model)

            self.assertTrue(witness.holds(model))


class CanonicalDomainTest(SimpleTestCase):
    def test_heisenberg_domain_is_first_support(self):
        model = HeisenbergLattice()

        canonical = canonical_domain(model)

        self.assertEqual(canonical.s1, 0)
        self.assertEqual(canonical.s2, 1)
        self.assertEqual(len(canonical.domain), 256)
        self.assertEqual(canonical.domain, model.seed_cells)
        self.assertEqual(canonical.c_t, 1 / canonical.delta)
        self.assertEqual(canonical.source, "construction")

    def test_block_lattice_uses_unit_cube(self):
        canonical = canonical_domain(ZdBlockLattice((2, 2)))

        self.assertEqual(canonical.source, "backend")
        self.assertEqual(canonical.domain, cube(0, 1, 2))
        self.assertEqual(canonical.c_t, Fraction(4))

    def test_block_lattice_construction(self):
        canonical = canonical_domain(ZdBlockLattice((2,)), use_backend=False)

        self.assertEqual(canonical.s1, 4)
        self.assertEqual(canonical.s2, 1)
        self.assertEqual(canonical.delta, Fraction(1, 4))
        self.assertEqual(canonical.c_t, Fraction(4))
        self.assertEqual(len(canonical.domain), 32)

    def test_domain_contains_identity(self):
        for model in (HeisenbergLattice(), ZdBlockLattice((2, 3))):
            canonical = canonical_domain(model, use_backend=False)

            self.assertIn(model.identity, canonical.domain)

    def test_delta_override_outside_slack_is_rejected(self):
        with self.assertRaises(ValueError):
            canonical_domain(HeisenbergLattice(), delta=Fraction(1, 2))


class VerifyDomainTest(SimpleTestCase):
    def test_heisenberg_chain_reaches_twenty_eight_points(self):
        model = HeisenbergLattice()
        first, second = heisenberg_box(12), heisenberg_box(6)

        to_first = verify_domain(model, model.seed_cells, first, 1)
        to_second = verify_domain(model, first, second, 1)

        self.assertEqual(len(to_first.domain), 52)
        self.assertEqual(len(to_second.domain), 28)
        self.assertEqual(len(to_first.witnesses), 256)
        self.assertEqual(len(to_second.witnesses), 256)
        self.assertTrue(to_second.recheck(model))

    def test_unit_cube_certifies_itself(self):
        model = ZdBlockLattice((2, 2))
        domain = cube(0, 1, 2)

        certificate = verify_domain(model, domain, domain, 1)

        self.assertEqual(set(certificate.witnesses), set(cube(-1, 0, 2)))
        self.assertTrue(certificate.recheck(model))

    def test_missing_corner_fails_at_origin(self):
        model = ZdBlockLattice((2, 2))

        with self.assertRaises(VerificationFailed) as caught:
            verify_domain(model, cube(0, 1, 2), [(0, 0), (0, 1), (1, 0)], 1)

        self.assertIn((0, 0), caught.exception.offending)
        self.assertNotIn((-1, -1), caught.exception.offending)
        self.assertEqual(caught.exception.level, 1)

    def test_chain_composes_with_summed_level(self):
        model = ZdBlockLattice((2, 2))
        chain = [cube(-3, 0, 2), cube(-2, 0, 2), cube(-1, 0, 2)]

        verify_domain(model, chain[0], chain[1], 1)
        verify_domain(model, chain[1], chain[2], 1)
        direct = verify_domain(model, chain[0], chain[2], 2)

        self.assertEqual(len(direct.witnesses), 16)
        self.assertTrue(direct.recheck(model))

    def test_superset_of_certified_domain_certifies(self):
        model = ZdBlockLattice((2, 2))
        larger = cube(0, 1, 2).union(LatticePointSet.of([(2, 2), (-3, 1)]))

        certificate = verify_domain(model, cube(0, 1, 2), larger, 1)

        self.assertEqual(len(certificate.domain), 6)

    def test_heisenberg_superset_certifies(self):
        model = HeisenbergLattice()
        larger = heisenberg_box(6).union(LatticePointSet.of([(4, 4, 20)]))

        certificate = verify_domain(model, heisenberg_box(12), larger, 1)

        self.assertEqual(len(certificate.domain), 29)

    def test_reference_must_contain_identity(self):
        model = ZdBlockLattice((2,))

        with self.assertRaises(ValueError):
            verify_domain(model, [(1,), (2,)], [(0,), (1,)], 1)

    def test_level_must_be_positive(self):
        model = ZdBlockLattice((2,))

        with self.assertRaises(ValueError):
            verify_domain(model, [(0,), (1,)], [(0,), (1,)], 0)


class ReduceDomainTest(SimpleTestCase):
    def test_unit_cube_is_already_minimal(self):
        model = ZdBlockLattice((2, 2))

        result = reduce_domain(model, cube(0, 1, 2))

        self.assertEqual(result.domain, cube(0, 1, 2))
        self.assertEqual(result.steps, ())

    def test_singleton_is_returned(self):
        model = ZdBlockLattice((2, 2))

        result = reduce_domain(model, [(0, 0)])

        self.assertEqual(result.domain.points, ((0, 0),))

    def test_interval_reduces_by_slabs(self):
        model = ZdBlockLattice((2,))

        result = reduce_domain(model, cube(-3, 0, 1))

        self.assertEqual(result.domain.points, ((-1,), (0,)))
        self.assertEqual(result.ledger, [4, 3, 2])
        self.assertEqual(
            [step.move for step in result.steps], ["slab 0=-3", "slab 0=-2"]
        )

    def test_steps_chain_certificates(self):
        model = ZdBlockLattice((2,))

        result = reduce_domain(model, cube(-3, 0, 1))

        previous = result.initial
        for step in result.steps:
            self.assertEqual(step.certificate.reference, previous)
            self.assertTrue(step.certificate.recheck(model))
            previous = step.certificate.domain

    def test_heisenberg_reduction_from_intermediate_box(self):
        model = HeisenbergLattice()

        result = reduce_domain(model, heisenberg_box(12))

        self.assertLessEqual(len(result.domain), 28)
        self.assertIn(model.identity, result.domain)
        self.assertTrue(result.domain.issubset(heisenberg_box(12)))

    def test_heisenberg_reduction_from_seed_cells(self):
        model = HeisenbergLattice()

        result = reduce_domain(model, model.seed_cells)

        self.assertEqual(result.ledger[0], 256)
        self.assertEqual(result.ledger[:3], [256, 192, 144])
        self.assertEqual(result.ledger, sorted(result.ledger, reverse=True))
        self.assertLessEqual(len(result.domain), 28)
        self.assertTrue(result.domain.issubset(model.seed_cells))
