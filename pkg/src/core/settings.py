"""
Django settings for the aperiodiq project.

The project uses Django for configuration, logging setup, management
commands and the test runner. There is no database and no HTTP surface.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get("APERIODIQ_SECRET_KEY", "aperiodiq-local-only")

DEBUG = os.environ.get("APERIODIQ_DEBUG", "") == "1"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "lattices",
    "substitutions",
    "testing_domains",
    "convergence",
    "spectral",
    "cli",
]

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/6.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Computation limits and tunables

APERIODIQ = {
    "POINT_CAP": int(os.environ.get("APERIODIQ_POINT_CAP", 10**7)),
    "MATRIX_CAP": int(os.environ.get("APERIODIQ_MATRIX_CAP", 4096)),
    "METRIC_GUARD": float(os.environ.get("APERIODIQ_METRIC_GUARD", 1e-9)),
    "M_MAX": int(os.environ.get("APERIODIQ_M_MAX", 6)),
    "PROBE_POINTS": int(os.environ.get("APERIODIQ_PROBE_POINTS", 70000)),
    "WORKERS": int(os.environ.get("APERIODIQ_WORKERS", 4)),
    "WITNESS_COUPLING": float(os.environ.get("APERIODIQ_WITNESS_COUPLING", 100.0)),
    "DEFINITIONS_DIR": Path(
        os.environ.get(
            "APERIODIQ_DEFINITIONS_DIR", BASE_DIR / "substitutions" / "definitions"
        )
    ),
}


# Logging

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "{levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": os.environ.get("APERIODIQ_LOG_LEVEL", "WARNING"),
    },
}
