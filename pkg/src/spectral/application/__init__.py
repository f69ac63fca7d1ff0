from .queries import SpectralQueryHandler, SpectralTableQuery, SpectrumQuery

__all__ = [
    # Queries
    "SpectrumQuery",
    "SpectralTableQuery",
    "SpectralQueryHandler",
]
