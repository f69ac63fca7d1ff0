from .serializers import (
    format_ledger,
    serialize_canonical_domain,
    serialize_certificate,
    serialize_domain,
    serialize_reduction,
)

__all__ = [
    "format_ledger",
    "serialize_canonical_domain",
    "serialize_certificate",
    "serialize_domain",
    "serialize_reduction",
]
