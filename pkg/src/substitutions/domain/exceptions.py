"""Domain exceptions for the substitution bounded context."""

from pathlib import Path


class SubstitutionException(Exception):
    """Base exception for all substitution errors."""

    pass


class UnknownLetter(SubstitutionException):
    """Raised when a letter is not part of the alphabet.

    Attributes:
        letter: The unknown letter.
    """

    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"Unknown letter: {letter}")


class InvalidRule(SubstitutionException):
    """Raised when a rule table does not match the alphabet or the seed cells."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid substitution rule: {reason}")


class NonPrimitiveRule(SubstitutionException):
    """Raised when an operation needs a primitive rule.

    Attributes:
        operation: Name of the operation that was refused.
    """

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation} requires a primitive substitution rule")


class InvalidSubstitutionFile(SubstitutionException):
    """Raised when a definition file cannot be parsed.

    Attributes:
        path: The file being parsed.
        line: One-based line number of the problem, 0 for whole-file issues.
        reason: What is wrong.
    """

    def __init__(self, path: Path | str, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        where = f"{path}:{line}" if line else str(path)
        super().__init__(f"{where}: {reason}")


class SubstitutionFileNotFound(SubstitutionException):
    """Raised when a definition file does not exist."""

    def __init__(self, path: Path | str):
        self.path = path
        super().__init__(f"Substitution file not found: {path}")


class UnknownSeed(SubstitutionException):
    """Raised when a seed name is neither declared nor ``const:<letter>``."""

    def __init__(self, name: str, available: list[str] | None = None):
        self.name = name
        self.available = available or []
        known = ", ".join(self.available) or "none"
        super().__init__(f"Unknown seed '{name}' (declared: {known})")


class NoTestingTuple(SubstitutionException):
    """Raised when no self-covering step is found for the testing domain.

    Attributes:
        max_level: The largest step that was tried.
    """

    def __init__(self, max_level: int):
        self.max_level = max_level
        super().__init__(f"Testing domain does not cover itself for N <= {max_level}")
