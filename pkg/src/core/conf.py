"""Access to the APERIODIQ settings block.

Library modules call :func:`aperiodiq_setting` instead of reading
``django.conf.settings`` directly so they keep working when Django has not
been configured (plain library use falls back to the defaults below).
"""

from pathlib import Path
from typing import Any

_DEFAULTS: dict[str, Any] = {
    "POINT_CAP": 10**7,
    "MATRIX_CAP": 4096,
    "METRIC_GUARD": 1e-9,
    "M_MAX": 6,
    "PROBE_POINTS": 70000,
    "WORKERS": 4,
    "WITNESS_COUPLING": 100.0,
    "DEFINITIONS_DIR": Path(__file__).resolve().parent.parent
    / "substitutions"
    / "definitions",
}


def aperiodiq_setting(name: str) -> Any:
    """Return one entry of the APERIODIQ settings block.

    Args:
        name: Key inside the block, e.g. ``"POINT_CAP"``.

    Returns:
        The configured value, or the built-in default when Django settings
        are unavailable or do not define the key.

    Raises:
        KeyError: If the name is not a known setting.
    """
    if name not in _DEFAULTS:
        raise KeyError(f"Unknown aperiodiq setting: {name}")
    try:
        from django.conf import settings

        block = getattr(settings, "APERIODIQ", {})
    except Exception:  # ImproperlyConfigured outside a Django process
        block = {}
    return block.get(name, _DEFAULTS[name])
