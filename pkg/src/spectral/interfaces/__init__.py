from .serializers import serialize_bands, serialize_table, spectrum_csv, table_csv

__all__ = [
    "serialize_bands",
    "serialize_table",
    "spectrum_csv",
    "table_csv",
]
