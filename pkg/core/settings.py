"""
Django settings for the core project.

The project has no web surface and no database: Django provides the
settings layer, the cache framework, logging configuration, management
commands and the test runner for the ``domination`` app.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

# Standard library imports
import os
from pathlib import Path

# Third-party imports
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("DJANGO_SECRET", "domination-local-secret")

DEBUG = os.getenv("DEBUG", "False").lower() == "true"

ALLOWED_HOSTS = []


# Application definition
INSTALLED_APPS = [
    # Django built-in apps
    "django.contrib.contenttypes",

    # Third-party apps
    "rest_framework",

    # Local apps
    "domination",
]


# Solver and search budgets
DOMINATION_SOLVER_BUDGET = int(os.getenv("DOMINATION_SOLVER_BUDGET", "100000000"))
DOMINATION_CYCLE_BUDGET = int(os.getenv("DOMINATION_CYCLE_BUDGET", "5000000"))
DOMINATION_MAX_ATTEMPTS = int(os.getenv("DOMINATION_MAX_ATTEMPTS", "1000"))
DOMINATION_DISCHARGE_MAX_STEPS = int(os.getenv("DOMINATION_DISCHARGE_MAX_STEPS", "1000"))

# Campaign reports
DOMINATION_JOBS = int(os.getenv("DOMINATION_JOBS", "1"))
DOMINATION_REPORT_SCHEMA = os.getenv("DOMINATION_REPORT_SCHEMA", "1.0")


# Cache Configuration (Redis when REDIS_URL is set, local memory otherwise)
CACHE_TTL = int(os.getenv("CACHE_TTL", "3600"))
REDIS_URL = os.getenv("REDIS_URL")

if REDIS_URL:
    CACHES = {
        "default": {
            "BACKEND": "django_redis.cache.RedisCache",
            "LOCATION": REDIS_URL,
            "OPTIONS": {
                "CLIENT_CLASS": "django_redis.client.DefaultClient",
            }
        }
    }
else:
    CACHES = {
        "default": {
            "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
            "LOCATION": "domination",
        }
    }


# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "standard",
        },
    },
    "loggers": {
        "domination": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}


# No persistence layer
DATABASES = {}


# Internationalization
LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"
