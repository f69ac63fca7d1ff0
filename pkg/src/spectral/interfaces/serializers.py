"""Serializers for the spectral bounded context."""

import csv
import io
import itertools

from spectral.domain.models import SpectralTable, SpectrumApprox

FORMAT_VERSION = 1
TABLE_COLUMNS = ("n", "size", "gap", "error_radius", "bound_C_over_lambda_n")


def serialize_bands(approx: SpectrumApprox) -> dict:
    """Band summary: merged intervals with the sampling error."""
    return {
        "format": FORMAT_VERSION,
        "grid": approx.grid,
        "samples": len(approx),
        "error_radius": approx.error_radius,
        "intervals": [list(band) for band in approx.bands()],
    }


def spectrum_csv(approx: SpectrumApprox) -> str:
    """One line per eigenvalue: phase indices, band index and energy."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    axes = [f"k{j + 1}" for j in range(approx.dimension)]
    writer.writerow([*axes, "band", "energy"])
    phases = itertools.product(range(approx.grid), repeat=approx.dimension)
    for index, energies in zip(phases, approx.band_matrix):
        for band, energy in enumerate(energies.tolist()):
            writer.writerow([*index, band, energy])
    return buffer.getvalue()


def serialize_table(table: SpectralTable) -> dict:
    return {
        "format": FORMAT_VERSION,
        "operator": table.operator,
        "grid": table.grid,
        "converges": table.converges,
        "C": table.c_constant,
        "rows": [
            {
                "n": row.n,
                "size": row.size,
                "gap": row.gap,
                "error_radius": row.error_radius,
                "bound": row.bound,
            }
            for row in table.rows
        ],
        "ratios": table.ratios(),
    }


def table_csv(table: SpectralTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in table.rows:
        writer.writerow([row.n, row.size, row.gap, row.error_radius, row.bound])
    return buffer.getvalue()
