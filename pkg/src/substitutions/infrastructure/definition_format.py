"""Reading and writing substitution definition files.

A definition file is line-oriented text with four sections::

    [lattice]
    kind = zd-block
    m = 2 2

    [alphabet]
    red potential=0 color=#c0392b
    blue potential=2

    [rule]
    red = blue red
        red red
    blue = red blue blue blue

    [seeds]
    rb = period 2 2 : red blue blue red
    start = const red

Rule rows list ``S₀(a)`` over the seed cells in lexicographic order; indented
lines continue the previous row. Seed blocks are listed in lexicographic
order of their cells ``0 ≤ γ < p``. Lines starting with ``#`` are comments.
"""

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from lattices.domain import HeisenbergLattice, LatticeModel, build_lattice

from ..domain.exceptions import InvalidRule, InvalidSubstitutionFile, UnknownLetter
from ..domain.models import (
    BlockPeriodicConfig,
    ConstantConfig,
    PeriodicConfig,
    SubstitutionDefinition,
    SubstitutionRule,
)
from ..domain.value_objects import Alphabet

SECTIONS = ("lattice", "alphabet", "rule", "seeds")
TOKENS_PER_LINE = 16


@dataclass
class _Entry:
    line: int
    key: str
    tokens: list[str] = field(default_factory=list)


class _Reader:
    def __init__(self, path: Path | str):
        self.path = path
        self.sections: dict[str, list[_Entry]] = {name: [] for name in SECTIONS}

    def fail(self, line: int, reason: str) -> InvalidSubstitutionFile:
        return InvalidSubstitutionFile(self.path, line, reason)

    def scan(self, text: str) -> None:
        section = None
        seen = set()
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if stripped.startswith("["):
                if not stripped.endswith("]"):
                    raise self.fail(number, f"malformed section header {stripped}")
                section = stripped[1:-1].strip().lower()
                if section not in SECTIONS:
                    raise self.fail(number, f"unknown section [{section}]")
                if section in seen:
                    raise self.fail(number, f"section [{section}] appears twice")
                seen.add(section)
                continue
            if section is None:
                raise self.fail(number, "content before the first section header")
            entries = self.sections[section]
            if raw[0].isspace():
                if section != "rule" or not entries:
                    raise self.fail(number, "unexpected continuation line")
                entries[-1].tokens.extend(stripped.split())
                continue
            if section == "alphabet":
                head, *rest = stripped.split()
                entries.append(_Entry(number, head, rest))
                continue
            if "=" not in stripped:
                raise self.fail(number, f"expected 'key = value' in [{section}]")
            key, value = (part.strip() for part in stripped.split("=", 1))
            if not key:
                raise self.fail(number, "missing key before '='")
            entries.append(_Entry(number, key, value.split()))

    def lattice(self) -> LatticeModel:
        entries = self.sections["lattice"]
        if not entries:
            raise self.fail(0, "missing [lattice] section")
        params = {}
        for entry in entries:
            if entry.key in params:
                raise self.fail(entry.line, f"duplicate lattice key {entry.key}")
            params[entry.key] = entry
        if "kind" not in params:
            raise self.fail(entries[0].line, "lattice kind is required")
        kind_entry = params.pop("kind")
        kind = " ".join(kind_entry.tokens)
        allowed = {"zd-block": {"m"}, "heisenberg3": {"stretch"}}.get(kind)
        if allowed is None:
            raise self.fail(kind_entry.line, f"unknown lattice kind {kind!r}")
        for key, entry in params.items():
            if key not in allowed:
                raise self.fail(entry.line, f"unexpected key {key} for {kind}")
        values = {}
        for key, entry in params.items():
            try:
                numbers = [int(token) for token in entry.tokens]
            except ValueError:
                raise self.fail(entry.line, f"{key} must be integers") from None
            if key == "stretch":
                if len(numbers) != 1:
                    raise self.fail(entry.line, "stretch takes one integer")
                values[key] = numbers[0]
            else:
                values[key] = numbers
        if kind == "zd-block" and "m" not in values:
            raise self.fail(kind_entry.line, "zd-block lattices need block sizes m")
        try:
            return build_lattice(kind, **values)
        except ValueError as exc:
            raise self.fail(kind_entry.line, str(exc)) from None

    def alphabet(self) -> Alphabet:
        entries = self.sections["alphabet"]
        if not entries:
            raise self.fail(0, "missing [alphabet] section")
        letters, potentials, colors = [], [], []
        for entry in entries:
            if entry.key in letters:
                raise self.fail(entry.line, f"letter {entry.key} declared twice")
            potential, color = None, ""
            for token in entry.tokens:
                name, _, value = token.partition("=")
                if name == "potential":
                    try:
                        potential = float(value)
                    except ValueError:
                        raise self.fail(
                            entry.line, f"potential {value!r} is not a number"
                        ) from None
                elif name == "color" and value:
                    color = value
                else:
                    raise self.fail(entry.line, f"unexpected attribute {token}")
            letters.append(entry.key)
            potentials.append(potential)
            colors.append(color)
        try:
            return Alphabet(tuple(letters), tuple(potentials), tuple(colors))
        except ValueError as exc:
            raise self.fail(entries[0].line, str(exc)) from None

    def _letter(self, alphabet: Alphabet, token: str, line: int) -> int:
        try:
            return alphabet.index(token)
        except UnknownLetter:
            raise self.fail(line, f"undeclared letter {token}") from None

    def rule(self, model: LatticeModel, alphabet: Alphabet) -> SubstitutionRule:
        entries = {}
        for entry in self.sections["rule"]:
            self._letter(alphabet, entry.key, entry.line)
            if entry.key in entries:
                raise self.fail(entry.line, f"rule for {entry.key} given twice")
            entries[entry.key] = entry
        cells = len(model.seed_cells)
        table = []
        for letter in alphabet.letters:
            entry = entries.get(letter)
            if entry is None:
                raise self.fail(0, f"no rule for letter {letter}")
            if len(entry.tokens) != cells:
                raise self.fail(
                    entry.line,
                    f"rule for {letter} has {len(entry.tokens)} cells, "
                    f"expected {cells}",
                )
            table.append([self._letter(alphabet, t, entry.line) for t in entry.tokens])
        try:
            return SubstitutionRule(model, alphabet, table)
        except InvalidRule as exc:
            raise self.fail(0, exc.reason) from None

    def seeds(
        self, model: LatticeModel, alphabet: Alphabet
    ) -> dict[str, PeriodicConfig]:
        seeds: dict[str, PeriodicConfig] = {}
        for entry in self.sections["seeds"]:
            if entry.key in seeds:
                raise self.fail(entry.line, f"seed {entry.key} declared twice")
            if entry.key.startswith("const:"):
                raise self.fail(entry.line, "seed names may not start with 'const:'")
            if not entry.tokens:
                raise self.fail(entry.line, f"seed {entry.key} is empty")
            form, *rest = entry.tokens
            if form == "const":
                if len(rest) != 1:
                    raise self.fail(entry.line, "constant seeds take one letter")
                letter = self._letter(alphabet, rest[0], entry.line)
                seeds[entry.key] = ConstantConfig(model, letter)
            elif form == "period":
                seeds[entry.key] = self._block_seed(model, alphabet, entry, rest)
            else:
                raise self.fail(entry.line, f"unknown seed form {form!r}")
        return seeds

    def _block_seed(
        self,
        model: LatticeModel,
        alphabet: Alphabet,
        entry: _Entry,
        tokens: list[str],
    ) -> BlockPeriodicConfig:
        if isinstance(model, HeisenbergLattice):
            raise self.fail(entry.line, "periodic blocks need a zd-block lattice")
        if ":" not in tokens:
            raise self.fail(entry.line, "expected 'period p1 ... pd : letters'")
        split = tokens.index(":")
        try:
            period = tuple(int(t) for t in tokens[:split])
        except ValueError:
            raise self.fail(entry.line, "period entries must be integers") from None
        if len(period) != model.dimension or any(p < 1 for p in period):
            raise self.fail(
                entry.line,
                f"period {period} does not fit a {model.dimension}-d lattice",
            )
        letters = [self._letter(alphabet, t, entry.line) for t in tokens[split + 1 :]]
        expected = int(np.prod(period))
        if len(letters) != expected:
            raise self.fail(
                entry.line,
                f"seed {entry.key} lists {len(letters)} letters, expected {expected}",
            )
        block = np.array(letters, dtype=np.uint8).reshape(period)
        return BlockPeriodicConfig(model, block)


def loads(
    text: str, path: Path | str = "<string>", name: str = ""
) -> SubstitutionDefinition:
    """Parse a definition file.

    Raises:
        InvalidSubstitutionFile: With the offending line number.
    """
    reader = _Reader(path)
    reader.scan(text)
    model = reader.lattice()
    alphabet = reader.alphabet()
    rule = reader.rule(model, alphabet)
    seeds = reader.seeds(model, alphabet)
    return SubstitutionDefinition(model, alphabet, rule, seeds, name)


def _format_number(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def dumps(definition: SubstitutionDefinition) -> str:
    """Write a definition in the format :func:`loads` reads."""
    model, alphabet = definition.model, definition.alphabet
    lines = ["[lattice]", f"kind = {model.kind}"]
    description = model.describe()
    if "m" in description:
        lines.append("m = " + " ".join(str(m) for m in description["m"]))
    if "stretch" in description:
        lines.append(f"stretch = {description['stretch']}")

    lines += ["", "[alphabet]"]
    for letter, potential, color in zip(
        alphabet.letters, alphabet.potentials, alphabet.colors
    ):
        attributes = [letter]
        if potential is not None:
            attributes.append(f"potential={_format_number(potential)}")
        if color:
            attributes.append(f"color={color}")
        lines.append(" ".join(attributes))

    lines += ["", "[rule]"]
    for index, letter in enumerate(alphabet.letters):
        tokens = [alphabet.name(v) for v in definition.rule.table[index].tolist()]
        chunks = [
            tokens[i : i + TOKENS_PER_LINE]
            for i in range(0, len(tokens), TOKENS_PER_LINE)
        ]
        lines.append(f"{letter} = " + " ".join(chunks[0]))
        lines.extend("    " + " ".join(chunk) for chunk in chunks[1:])

    if definition.seeds:
        lines += ["", "[seeds]"]
        for name, seed in definition.seeds.items():
            if isinstance(seed, ConstantConfig):
                lines.append(f"{name} = const {alphabet.name(seed.letter)}")
            else:
                period = " ".join(str(p) for p in seed.period)
                letters = alphabet.render(seed.block.reshape(-1).tolist())
                lines.append(f"{name} = period {period} : {letters}")
    return "\n".join(lines) + "\n"
