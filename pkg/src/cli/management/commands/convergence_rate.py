from convergence.application import ConvergenceQueryHandler, RateReportQuery
from convergence.domain import DivergentSeed
from convergence.interfaces import (
    rate_report_csv,
    serialize_certificate,
    serialize_rate_report,
)

from ..base import DefinitionCommand


class Command(DefinitionCommand):
    help = "Measure how fast S^n(seed) approaches the subshift, as CSV."

    def add_options(self, parser):
        parser.add_argument("seed", help="Declared seed name or const:<letter>")
        parser.add_argument("--nmax", type=int, default=5, help="Largest level")
        parser.add_argument("--rmax", type=int, default=4, help="Largest radius")
        parser.add_argument(
            "--lin-rep-radius",
            type=int,
            default=1,
            help="Largest radius scanned for the repetitivity bound",
        )
        parser.add_argument(
            "--json", action="store_true", help="Print the full report as JSON"
        )

    def run(self, definition, **options):
        query = RateReportQuery(
            definition,
            options["seed"],
            n_max=options["nmax"],
            r_max=options["rmax"],
            lin_rep_radius=options["lin_rep_radius"],
        )
        try:
            report = ConvergenceQueryHandler().handle_rate(query)
        except DivergentSeed as exc:
            self.emit(serialize_certificate(exc.certificate, definition.alphabet))
            raise

        if options["json"]:
            self.emit(serialize_rate_report(report))
        else:
            self.stdout.write(rate_report_csv(report), ending="")
        self.stderr.write(
            f"slope={report.slope} C={report.c_constant} M1={report.m1} "
            f"n0={report.legal_level}"
        )
