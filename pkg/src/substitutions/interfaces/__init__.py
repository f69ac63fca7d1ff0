from .serializers import (
    FORMAT_VERSION,
    serialize_definition,
    serialize_dictionary,
    serialize_patch,
    serialize_seed,
)

__all__ = [
    "FORMAT_VERSION",
    "serialize_definition",
    "serialize_dictionary",
    "serialize_patch",
    "serialize_seed",
]
