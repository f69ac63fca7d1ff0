from .dtos import SpectralTableQuery, SpectrumQuery
from .handlers import SpectralQueryHandler

__all__ = ["SpectrumQuery", "SpectralTableQuery", "SpectralQueryHandler"]
