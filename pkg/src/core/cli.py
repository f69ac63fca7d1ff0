"""Console entry point: ``aperiodiq <command> [options]``.

Runs the management commands of the ``cli`` app; ``manage.py`` delegates here
too. A failing command exits with its ``CommandError`` return code.
"""

import os
import sys


def main(argv: list[str] | None = None) -> None:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "core.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable?"
        ) from exc
    execute_from_command_line(["aperiodiq", *(sys.argv[1:] if argv is None else argv)])
