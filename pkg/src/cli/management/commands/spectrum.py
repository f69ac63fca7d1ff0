from pathlib import Path

from spectral.application import SpectralQueryHandler, SpectralTableQuery, SpectrumQuery
from spectral.domain import OPERATORS
from spectral.interfaces import (
    serialize_bands,
    serialize_table,
    spectrum_csv,
    table_csv,
)

from ..base import DefinitionCommand


def parse_levels(text: str) -> tuple[int, int | None]:
    """``"3"`` is one level, ``"0:4"`` a table up to level 4."""
    first, sep, last = text.partition(":")
    try:
        if not sep:
            return int(first), None
        start, stop = int(first or 0), int(last)
    except ValueError:
        raise ValueError(f"Level must be N or A:B, got '{text}'") from None
    if start != 0 or stop < 1:
        raise ValueError(f"Level ranges start at 0 and end above it, got '{text}'")
    return start, stop


class Command(DefinitionCommand):
    help = (
        "Floquet-Bloch spectrum of S^n(seed), or with --n 0:N the table of "
        "successive spectral distances."
    )

    def add_options(self, parser):
        parser.add_argument("seed", help="Declared seed name or const:<letter>")
        parser.add_argument("--n", default="0", help="Level N or range 0:N")
        parser.add_argument("--grid", type=int, default=16, help="Phases per axis")
        parser.add_argument("--operator", choices=OPERATORS, default="laplacian")
        parser.add_argument("--csv", type=Path, help="Write eigenvalues here")
        parser.add_argument(
            "--allow-divergent",
            action="store_true",
            help="Build the table for a diverging seed",
        )
        parser.add_argument(
            "--json", action="store_true", help="Print a table as JSON"
        )
        parser.add_argument("--workers", type=int, help="Eigensolver threads")

    def run(self, definition, **options):
        handler = SpectralQueryHandler(workers=options["workers"])
        level, n_max = parse_levels(options["n"])

        if n_max is None:
            approx = handler.handle_spectrum(
                SpectrumQuery(
                    definition,
                    options["seed"],
                    level=level,
                    grid=options["grid"],
                    operator=options["operator"],
                )
            )
            if options["csv"] is not None:
                options["csv"].write_text(spectrum_csv(approx))
            self.emit(serialize_bands(approx))
            return

        table = handler.handle_table(
            SpectralTableQuery(
                definition,
                options["seed"],
                n_max=n_max,
                grid=options["grid"],
                operator=options["operator"],
                require_convergence=not options["allow_divergent"],
            )
        )
        if options["json"]:
            self.emit(serialize_table(table))
        else:
            self.stdout.write(table_csv(table), ending="")
