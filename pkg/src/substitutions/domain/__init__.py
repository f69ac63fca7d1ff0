from .exceptions import (
    InvalidRule,
    InvalidSubstitutionFile,
    NonPrimitiveRule,
    NoTestingTuple,
    SubstitutionException,
    SubstitutionFileNotFound,
    UnknownLetter,
    UnknownSeed,
)
from .models import (
    BlockPeriodicConfig,
    ConstantConfig,
    DilationPeriodicConfig,
    Patch,
    PeriodicConfig,
    SubstitutionDefinition,
    SubstitutionRule,
)
from .services import (
    ball_shape,
    complexity_exponent,
    is_legal,
    iterate_letter,
    legal_dictionary,
    lifting_level,
    lin_rep_lower_bound,
    patch_count,
    primitivity_exponent,
    probe_levels,
    substitute_patch,
    substitute_periodic,
    testing_tuple,
    window_patches,
)
from .value_objects import Alphabet, WindowPatch
from .windows import LegalDictionary, WindowExtractor, distinct_rows, locate_windows

__all__ = [
    # Models
    "Patch",
    "SubstitutionRule",
    "PeriodicConfig",
    "ConstantConfig",
    "BlockPeriodicConfig",
    "DilationPeriodicConfig",
    "SubstitutionDefinition",
    "LegalDictionary",
    "WindowExtractor",
    # Services
    "substitute_patch",
    "iterate_letter",
    "window_patches",
    "legal_dictionary",
    "is_legal",
    "primitivity_exponent",
    "substitute_periodic",
    "patch_count",
    "complexity_exponent",
    "lin_rep_lower_bound",
    "lifting_level",
    "testing_tuple",
    "probe_levels",
    "ball_shape",
    "distinct_rows",
    "locate_windows",
    # Exceptions
    "SubstitutionException",
    "UnknownLetter",
    "InvalidRule",
    "NonPrimitiveRule",
    "NoTestingTuple",
    "InvalidSubstitutionFile",
    "SubstitutionFileNotFound",
    "UnknownSeed",
    # Value Objects
    "Alphabet",
    "WindowPatch",
]
