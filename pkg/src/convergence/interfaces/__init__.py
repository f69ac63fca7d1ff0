from .serializers import rate_report_csv, serialize_certificate, serialize_rate_report

__all__ = [
    "rate_report_csv",
    "serialize_certificate",
    "serialize_rate_report",
]
