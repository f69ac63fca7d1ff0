from django.test import SimpleTestCase

from convergence.application import (
    CertifySeedQuery,
    ComputeStepQuery,
    ConvergenceQueryHandler,
    RateReportQuery,
)
from convergence.domain import ConvergenceCertified, DivergentSeed
from convergence.infrastructure import EventDispatcher
from convergence.interfaces import (
    rate_report_csv,
    serialize_certificate,
    serialize_rate_report,
)
from lattices.domain import ZdBlockLattice
from substitutions.domain import UnknownSeed
from substitutions.infrastructure import SubstitutionFileRepository

REPOSITORY = SubstitutionFileRepository()


class ConvergenceQueryHandlerTest(SimpleTestCase):
    def setUp(self):
        self.definition = REPOSITORY.get("table-tiling")
        self.dispatcher = EventDispatcher()
        self.handler = ConvergenceQueryHandler(self.dispatcher)
        self.certified = []
        self.dispatcher.subscribe(ConvergenceCertified, self.certified.append)

    def test_certify_publishes_verdict(self):
        self.handler.handle_certify(CertifySeedQuery(self.definition, "rb"))
        self.handler.handle_certify(CertifySeedQuery(self.definition, "const:red"))

        self.assertEqual(
            [(e.seed, e.verdict) for e in self.certified],
            [("rb", "converges"), ("const:red", "diverges")],
        )

    def test_unknown_seed(self):
        with self.assertRaises(UnknownSeed):
            self.handler.handle_certify(CertifySeedQuery(self.definition, "nope"))

        self.assertEqual(self.certified, [])

    def test_rate_of_diverging_seed(self):
        query = RateReportQuery(self.definition, "const:blue", n_max=1, r_max=1)

        with self.assertRaises(DivergentSeed):
            self.handler.handle_rate(query)

    def test_rate_rows(self):
        query = RateReportQuery(self.definition, "gy", n_max=1, r_max=1)

        report = self.handler.handle_rate(query)

        self.assertEqual(len(report.rows), 2)
        self.assertEqual(self.certified[0].verdict, "converges")

    def test_step(self):
        query = ComputeStepQuery(ZdBlockLattice((2, 2)), ((0, 0), (0, 1)))

        self.assertEqual(self.handler.handle_step(query), 1)


class ConvergenceSerializerTest(SimpleTestCase):
    def setUp(self):
        self.definition = REPOSITORY.get("table-tiling")
        self.handler = ConvergenceQueryHandler()

    def test_diverging_certificate_carries_cycle(self):
        certificate = self.handler.handle_certify(
            CertifySeedQuery(self.definition, "const:red")
        )

        data = serialize_certificate(certificate, self.definition.alphabet)

        self.assertEqual(data["format"], 1)
        self.assertEqual(data["verdict"], "diverges")
        self.assertEqual(data["seed_windows"], ["red red red red"])
        self.assertEqual(data["cycle"][0], data["cycle"][-1])
        self.assertNotIn("n0", data)

    def test_converging_certificate_carries_level(self):
        certificate = self.handler.handle_certify(
            CertifySeedQuery(self.definition, "rb")
        )

        data = serialize_certificate(certificate, self.definition.alphabet)

        self.assertEqual(data["n0"], 0)
        self.assertEqual(data["illegal_seed_windows"], [])
        self.assertNotIn("cycle", data)

    def test_rate_csv(self):
        report = self.handler.handle_rate(
            RateReportQuery(self.definition, "rb", n_max=1, r_max=1)
        )

        lines = rate_report_csv(report).splitlines()
        data = serialize_rate_report(report)

        self.assertEqual(lines[0], "n,r_star,delta,bound_C_over_lambda_n")
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("0,"))
        self.assertEqual(data["format"], 1)
        self.assertEqual(data["n0"], 0)
        self.assertEqual(len(data["rows"]), 2)


class ConvergenceEventDispatcherTest(SimpleTestCase):
    def test_unsubscribed_handler_is_not_called(self):
        dispatcher = EventDispatcher()
        received = []
        dispatcher.subscribe(ConvergenceCertified, received.append)
        dispatcher.unsubscribe(ConvergenceCertified, received.append)

        dispatcher.publish(ConvergenceCertified(seed="rb", verdict="converges"))

        self.assertEqual(received, [])

    def test_handlers_own_their_dispatchers(self):
        definition = REPOSITORY.get("table-tiling")
        received = []
        EventDispatcher().subscribe(ConvergenceCertified, received.append)

        ConvergenceQueryHandler().handle_certify(CertifySeedQuery(definition, "gy"))

        self.assertEqual(received, [])
