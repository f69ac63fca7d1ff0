"""Repository for substitution definition files.

Definitions are addressed by a file path or by the stem of a file in the
configured definitions directory, so ``table-tiling`` and
``/some/where/table-tiling.sub`` both work.
"""

import logging
from pathlib import Path

from core.conf import aperiodiq_setting

from ..domain.exceptions import SubstitutionFileNotFound
from ..domain.models import SubstitutionDefinition
from .definition_format import dumps, loads

logger = logging.getLogger(__name__)

SUFFIX = ".sub"


class SubstitutionFileRepository:
    """Loads and stores substitution definitions as ``.sub`` files.

    Attributes:
        directory: The directory searched for bare definition names.
    """

    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory or aperiodiq_setting("DEFINITIONS_DIR"))
        self._loaded: dict[Path, SubstitutionDefinition] = {}

    def resolve(self, name: Path | str) -> Path:
        """Find the file a name refers to.

        Raises:
            SubstitutionFileNotFound: If neither the path nor a shipped
                definition of that name exists.
        """
        path = Path(name)
        if path.is_file():
            return path.resolve()
        for candidate in (self.directory / path, self.directory / f"{path}{SUFFIX}"):
            if candidate.is_file():
                return candidate.resolve()
        raise SubstitutionFileNotFound(name)

    def get(self, name: Path | str) -> SubstitutionDefinition:
        """Load a definition, reusing earlier loads of the same file.

        Raises:
            SubstitutionFileNotFound: If the file does not exist.
            InvalidSubstitutionFile: If it does not parse.
        """
        path = self.resolve(name)
        if path not in self._loaded:
            text = path.read_text(encoding="utf-8")
            self._loaded[path] = loads(text, path, path.stem)
            logger.debug("Loaded substitution definition %s", path)
        return self._loaded[path]

    def list_available(self) -> list[str]:
        """Stems of the definitions in the directory, sorted."""
        if not self.directory.is_dir():
            return []
        return sorted(p.stem for p in self.directory.glob(f"*{SUFFIX}"))

    def save(self, definition: SubstitutionDefinition, path: Path | str) -> Path:
        """Write a definition to a file and return its path."""
        path = Path(path)
        path.write_text(dumps(definition), encoding="utf-8")
        self._loaded.pop(path.resolve(), None)
        logger.info("Wrote substitution definition %s", path)
        return path
