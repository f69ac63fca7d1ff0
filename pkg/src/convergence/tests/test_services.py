"""Tests for the substitution graph, certificates and rate reports."""

import itertools
import math
from fractions import Fraction

from django.test import SimpleTestCase, tag

from convergence.domain import (
    DivergentSeed,
    GraphTooLarge,
    SearchExhausted,
    Verdict,
    build_graph,
    certify,
    compute_n_t,
    measure_delta,
    rate_constant,
    rate_report,
    realised_legal_level,
    seed_windows,
)
from lattices.domain import HeisenbergLattice, LatticePointSet, ZdBlockLattice
from substitutions.domain import substitute_periodic
from substitutions.infrastructure import SubstitutionFileRepository

REPOSITORY = SubstitutionFileRepository()

RED, BLUE, GRAY, YELLOW = range(4)


def table_tiling():
    return REPOSITORY.get("table-tiling")


def heisenberg():
    return REPOSITORY.get("heisenberg")


class ComputeStepTest(SimpleTestCase):
    def test_unit_cubes_cover_themselves_in_one_step(self):
        for blocks in ((2,), (2, 2), (2, 2, 2)):
            model = ZdBlockLattice(blocks)
            cube = itertools.product((0, 1), repeat=len(blocks))

            self.assertEqual(compute_n_t(model, cube), 1)

    def test_heisenberg_testing_domain(self):
        model = HeisenbergLattice()
        shape, step = model.testing_tuple()

        self.assertEqual(compute_n_t(model, shape), step)

    def test_gapped_pair_never_covers_itself(self):
        with self.assertRaises(SearchExhausted) as ctx:
            compute_n_t(ZdBlockLattice((2,)), [(0,), (5,)], m_max=3)

        self.assertEqual(ctx.exception.m_max, 3)


class SubstitutionGraphTest(SimpleTestCase):
    def setUp(self):
        self.graph = build_graph(table_tiling().rule)

    def test_default_graph_uses_unit_square(self):
        self.assertEqual(
            self.graph.shape, LatticePointSet.of(itertools.product((0, 1), repeat=2))
        )
        self.assertEqual(self.graph.step, 1)
        self.assertEqual(self.graph.vertex_count, 256)

    def test_legal_vertices_have_no_successors(self):
        rows = seed_windows(self.graph, table_tiling().seed("rb"))

        for row in rows:
            self.assertTrue(self.graph.is_legal(row))
            self.assertEqual(self.graph.successors(row), ())

    def test_all_red_square_has_illegal_successors(self):
        successors = self.graph.successors((RED,) * 4)

        self.assertTrue(successors)
        for row in successors:
            self.assertFalse(self.graph.is_legal(row))

    def test_edges_join_illegal_windows(self):
        for source, target in self.graph.edges(cap=256):
            self.assertFalse(self.graph.is_legal(source))
            self.assertFalse(self.graph.is_legal(target))

    def test_edges_refuse_oversized_graph(self):
        with self.assertRaises(GraphTooLarge) as ctx:
            list(self.graph.edges(cap=100))

        self.assertEqual(ctx.exception.count, 256)

    def test_shape_without_step_gets_computed_step(self):
        graph = build_graph(table_tiling().rule, shape=[(0, 0), (1, 0)])

        self.assertEqual(graph.step, 1)
        self.assertEqual(graph.vertex_count, 16)


class CertifyTest(SimpleTestCase):
    def setUp(self):
        self.definition = table_tiling()
        self.graph = build_graph(self.definition.rule)

    def test_every_constant_letter_diverges(self):
        for letter in self.definition.alphabet.letters:
            certificate = certify(self.graph, self.definition.seed(f"const:{letter}"))

            self.assertEqual(certificate.verdict, Verdict.DIVERGES, letter)
            self.assertFalse(certificate.converges)

    def test_cycle_is_a_closed_path(self):
        certificate = certify(self.graph, self.definition.seed("const:red"))
        cycle = certificate.cycle

        self.assertGreaterEqual(len(cycle), 2)
        self.assertEqual(cycle[0], cycle[-1])
        for source, target in zip(cycle, cycle[1:]):
            self.assertIn(target, self.graph.successors(source))

    def test_substituted_constant_seed_keeps_illegal_windows(self):
        seed = self.definition.seed("const:red")
        rule = self.definition.rule

        for n in (1, 2, 3):
            rows = seed_windows(self.graph, substitute_periodic(rule, seed, n))
            illegal = [row for row in rows if not self.graph.is_legal(row)]

            self.assertTrue(illegal, n)

    def test_periodic_seeds_converge_immediately(self):
        for name in ("rb", "gy"):
            certificate = certify(self.graph, self.definition.seed(name))

            self.assertEqual(certificate.verdict, Verdict.CONVERGES, name)
            self.assertEqual(certificate.illegal_seed_windows, ())
            self.assertEqual(certificate.legal_level, 0)
            self.assertEqual(certificate.longest_path, 0)

    def test_bound_level_is_vertex_count_times_step(self):
        certificate = certify(self.graph, self.definition.seed("rb"))

        self.assertEqual(certificate.bound_level, 256)

    def test_converging_level_rechecks(self):
        seed = self.definition.seed("gy")

        self.assertEqual(realised_legal_level(self.graph, seed, 3), 0)

    def test_heisenberg_constant_seeds_converge(self):
        definition = heisenberg()
        graph = build_graph(definition.rule)

        for letter in definition.alphabet.letters:
            certificate = certify(graph, definition.seed(f"const:{letter}"))

            self.assertTrue(certificate.converges, letter)
            self.assertLess(certificate.longest_path, graph.vertex_count)


class RateConstantTest(SimpleTestCase):
    def test_planar_pairs(self):
        c, m1, parts = rate_constant(ZdBlockLattice((2, 2)), Fraction(1), 0)

        self.assertAlmostEqual(c, 16.0)
        self.assertAlmostEqual(m1, 4.0)
        self.assertEqual(parts["c_minus"], Fraction(1))
        self.assertEqual(parts["shift"], 4)

    def test_triadic_line(self):
        c, m1, _ = rate_constant(ZdBlockLattice((3,)), Fraction(1), 0)

        self.assertAlmostEqual(c, 27.0)
        self.assertAlmostEqual(m1, 3.0)

    def test_quaternary_plane(self):
        c, m1, parts = rate_constant(ZdBlockLattice((4, 4)), Fraction(1), 0)

        self.assertAlmostEqual(c, 256 / 5)
        self.assertAlmostEqual(m1, math.log(256 / 5) / math.log(4))
        self.assertEqual(parts["c_minus"], Fraction(5))
        self.assertEqual(parts["shift"], 4)

    def test_huge_legal_level_saturates(self):
        c, m1, _ = rate_constant(ZdBlockLattice((2, 2)), Fraction(1), 5000)

        self.assertEqual(c, math.inf)
        self.assertGreater(m1, 5000)


class RateReportTest(SimpleTestCase):
    def test_delta_is_a_unit_fraction(self):
        definition = table_tiling()

        delta = measure_delta(definition.rule, definition.seed("rb"), 1, 1)

        self.assertIn(delta, (Fraction(1), Fraction(1, 2)))

    def test_report_rows_and_constants(self):
        definition = table_tiling()
        rule = definition.rule

        report = rate_report(rule, definition.seed("rb"), n_max=2, r_max=1)

        self.assertEqual([row.n for row in report.rows], [0, 1, 2])
        self.assertEqual(report.legal_level, 0)
        self.assertIsNone(report.complexity)
        self.assertGreaterEqual(report.lin_rep, Fraction(1))
        expected, _, _ = rate_constant(rule.model, report.lin_rep, 0)
        self.assertAlmostEqual(report.c_constant, expected)
        for row in report.rows:
            self.assertLessEqual(row.delta, Fraction(1))
            self.assertAlmostEqual(row.bound, report.c_constant / 2**row.n)
            self.assertAlmostEqual(
                row.block_bound, max(2 * float(report.lin_rep), 4.0) / 2**row.n
            )
        self.assertIn("constant uses a lower bound on C_LR", report.notes)

    @tag("slow")
    def test_block_bound_holds_up_to_level_five(self):
        definition = table_tiling()

        report = rate_report(
            definition.rule, definition.seed("rb"), n_max=5, r_max=10, lin_rep_radius=2
        )

        self.assertEqual([row.r_star for row in report.rows], [0, 1, 1, 2, 3, 5])
        for row in report.rows:
            self.assertLessEqual(row.delta, row.block_bound)
            self.assertLessEqual(row.delta, row.bound)
        self.assertGreater(report.lower_constant, 0)
        self.assertAlmostEqual(report.slope, -0.327, delta=0.005)

    def test_diverging_seed_is_rejected(self):
        definition = table_tiling()

        with self.assertRaises(DivergentSeed) as ctx:
            rate_report(definition.rule, definition.seed("const:red"), 2, 1)

        self.assertEqual(ctx.exception.certificate.verdict, Verdict.DIVERGES)
