"""
Django settings for the mvpoly project.

There is no database, no URL configuration and no web server: the project is
driven entirely through management commands (see ``manage.py help``).
Tunables are read from the environment, optionally through a ``.env`` file
at the project root.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
PROJECT_ROOT = BASE_DIR.parent

# Load environment variables from .env file
load_dotenv(PROJECT_ROOT / ".env")


SECRET_KEY = os.getenv("SECRET_KEY", "mvpoly-insecure-local-only")

DEBUG = os.getenv("DEBUG", "False").lower() == "true"


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    # Third party
    "rest_framework",
    # Local apps
    "mvpoly.apps.core",
    "mvpoly.apps.rootdatum",
    "mvpoly.apps.weyl",
    "mvpoly.apps.bz",
    "mvpoly.apps.kashiwara",
    "mvpoly.apps.crystal",
    "mvpoly.apps.am",
    "mvpoly.apps.cli",
]

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [],
            # Templates render plain text and DOT, never HTML.
            "autoescape": False,
        },
    },
]

# Everything is computed in memory.
DATABASES = {}

USE_I18N = False

USE_TZ = True


# Logging
# https://docs.djangoproject.com/en/6.0/topics/logging/

MV_LOG_LEVEL = os.getenv("MV_LOG_LEVEL", "WARNING").upper()

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
    "loggers": {
        "mvpoly": {
            "handlers": ["console"],
            "level": MV_LOG_LEVEL,
            "propagate": False,
        },
    },
}


# Computation limits

# Nodes visited by crystal graph construction and AM scans.
MV_NODE_CAP = int(os.getenv("MV_NODE_CAP", "100000"))

# Elements of a Weyl group before enumeration gives up.
MV_WEYL_SIZE_CAP = int(os.getenv("MV_WEYL_SIZE_CAP", "100000"))

# Roots generated by reflection closure before a Cartan matrix is declared
# not of finite type.
MV_ROOT_CAP = int(os.getenv("MV_ROOT_CAP", "10000"))

# Largest rank for which every reduced word of w0 is enumerated.
MV_REDUCED_WORD_RANK_CAP = int(os.getenv("MV_REDUCED_WORD_RANK_CAP", "5"))

# Dominant shifts tried when embedding a stable polytope into some B(lambda).
MV_EMBED_SEARCH_CAP = int(os.getenv("MV_EMBED_SEARCH_CAP", "64"))

# Threads used by AM scans; 1 checks elements one after another.
MV_SCAN_WORKERS = int(os.getenv("MV_SCAN_WORKERS", "1"))
