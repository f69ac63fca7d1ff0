"""Serializers for the convergence bounded context.

Windows are rendered as letter strings in shape order; rationals as strings.
"""

import csv
import io
import math

from convergence.domain.models import ConvergenceCertificate, RateReport
from substitutions.domain.value_objects import Alphabet

FORMAT_VERSION = 1
RATE_COLUMNS = ("n", "r_star", "delta", "bound_C_over_lambda_n")


def _number(value: float | None):
    if value is None:
        return None
    return value if math.isfinite(value) else str(value)


def serialize_certificate(
    certificate: ConvergenceCertificate, alphabet: Alphabet
) -> dict:
    """Serialize a certificate; a diverging one carries its closed path."""
    data = {
        "format": FORMAT_VERSION,
        "verdict": certificate.verdict.value,
        "shape": certificate.shape.as_lists(),
        "step": certificate.step,
        "seed_windows": [alphabet.render(row) for row in certificate.seed_windows],
        "illegal_seed_windows": [
            alphabet.render(row) for row in certificate.illegal_seed_windows
        ],
        "bound_level": certificate.bound_level,
        "explored": certificate.explored,
    }
    if certificate.converges:
        data["n0"] = certificate.legal_level
        data["longest_path"] = certificate.longest_path
    else:
        data["cycle"] = [alphabet.render(row) for row in certificate.cycle]
    return data


def serialize_rate_report(report: RateReport) -> dict:
    return {
        "format": FORMAT_VERSION,
        "rows": [
            {
                "n": row.n,
                "r_star": row.r_star,
                "delta": str(row.delta),
                "bound": _number(row.bound),
                "block_bound": row.block_bound,
            }
            for row in report.rows
        ],
        "slope": report.slope,
        "lower_constant": _number(report.lower_constant),
        "C": _number(report.c_constant),
        "M1": _number(report.m1),
        "C_LR_lower": str(report.lin_rep),
        "n0": report.legal_level,
        "C_minus": str(report.c_minus),
        "s": report.shift,
        "C_T": str(report.c_t),
        "complexity": report.complexity,
        "notes": list(report.notes),
    }


def rate_report_csv(report: RateReport) -> str:
    """Render the rate rows as CSV with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RATE_COLUMNS)
    for row in report.rows:
        writer.writerow([row.n, row.r_star, float(row.delta), row.bound])
    return buffer.getvalue()
