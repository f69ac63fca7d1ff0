"""Serializers for the substitution bounded context.

Dictionaries are emitted as sorted arrays of value strings, one string per
window with the letter names in shape order.
"""

from substitutions.domain.models import (
    ConstantConfig,
    Patch,
    PeriodicConfig,
    SubstitutionDefinition,
)
from substitutions.domain.value_objects import Alphabet
from substitutions.domain.windows import LegalDictionary

FORMAT_VERSION = 1


def serialize_dictionary(dictionary: LegalDictionary, alphabet: Alphabet) -> dict:
    return {
        "format": FORMAT_VERSION,
        "shape": dictionary.shape.as_lists(),
        "size": len(dictionary),
        "windows": sorted(alphabet.render(row) for row in dictionary.rows),
    }


def serialize_patch(patch: Patch, alphabet: Alphabet) -> dict:
    return {
        "points": patch.support.as_lists(),
        "letters": [alphabet.name(v) for v in patch.values],
    }


def serialize_seed(seed: PeriodicConfig, alphabet: Alphabet) -> dict:
    if isinstance(seed, ConstantConfig):
        return {"kind": "const", "letter": alphabet.name(seed.letter)}
    return {
        "kind": "period",
        "period": list(seed.period),
        "letters": [alphabet.name(v) for v in seed.block.reshape(-1).tolist()],
    }


def serialize_definition(definition: SubstitutionDefinition) -> dict:
    """Serialize everything a definition file declares."""
    alphabet = definition.alphabet
    return {
        "format": FORMAT_VERSION,
        "name": definition.name,
        "lattice": definition.model.describe(),
        "alphabet": [
            {"letter": letter, "potential": potential, "color": color}
            for letter, potential, color in zip(
                alphabet.letters, alphabet.potentials, alphabet.colors
            )
        ],
        "rule": {
            letter: [alphabet.name(v) for v in definition.rule.table[i].tolist()]
            for i, letter in enumerate(alphabet.letters)
        },
        "seeds": {
            name: serialize_seed(seed, alphabet)
            for name, seed in definition.seeds.items()
        },
    }
