"""Value objects for the substitution domain."""

from dataclasses import dataclass, field

from lattices.domain import LatticePointSet

from .exceptions import UnknownLetter


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet with optional letter potentials and colors.

    Letters are referred to by their index in ``letters`` everywhere outside
    parsing and reporting.

    Attributes:
        letters: Distinct letter names.
        potentials: Real potential per letter, ``None`` when undeclared.
        colors: Display color per letter, empty when undeclared.
    """

    letters: tuple[str, ...]
    potentials: tuple[float | None, ...] = ()
    colors: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.letters:
            raise ValueError("Alphabet must not be empty")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"Letter names must be unique: {self.letters}")
        if len(self.letters) > 255:
            raise ValueError("At most 255 letters are supported")
        if not self.potentials:
            object.__setattr__(self, "potentials", (None,) * len(self.letters))
        if not self.colors:
            object.__setattr__(self, "colors", ("",) * len(self.letters))
        if len(self.potentials) != len(self.letters) or len(self.colors) != len(
            self.letters
        ):
            raise ValueError("Potentials and colors must match the letters")

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, letter: str) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise UnknownLetter(letter) from None

    def name(self, index: int) -> str:
        return self.letters[index]

    def potential(self, index: int) -> float:
        value = self.potentials[index]
        return 0.0 if value is None else float(value)

    def render(self, values) -> str:
        return " ".join(self.letters[v] for v in values)


@dataclass(frozen=True)
class WindowPatch:
    """A patch re-anchored to a fixed shape ``T``.

    Values follow the enumeration of the shape, so two windows over the same
    shape are equal exactly when their value tuples are.

    Attributes:
        shape: The shared shape ``T``.
        values: Letter index per point of ``T``.
    """

    shape: LatticePointSet = field(compare=False, repr=False)
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.shape):
            raise ValueError(
                f"Window has {len(self.values)} values for a shape of "
                f"{len(self.shape)} points"
            )

    def value_at(self, point) -> int:
        return self.values[self.shape.index[point]]
