"""
Django settings for the umbra project (exact umbral calculus engine).
"""

import os
from fractions import Fraction
from pathlib import Path

from django.core.exceptions import ImproperlyConfigured
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-change-me')

DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 'yes')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # Local apps
    'coefficients',
    'series',
    'polyop',
    'umbral',
    'families',
    'identities',
    'core',
]


# Database (verification ledger)

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('DB_NAME', BASE_DIR / 'umbra.sqlite3'),
    }
}


USE_TZ = True

TIME_ZONE = 'UTC'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Engine settings

def _int_setting(name, default=None, minimum=0):
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ImproperlyConfigured(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ImproperlyConfigured(f"{name} must be >= {minimum}, got {value}")
    return value


def _lambda_list(name, default):
    values = []
    for item in os.getenv(name, default).split(','):
        if not item.strip():
            continue
        try:
            value = Fraction(item.strip())
        except (ValueError, ZeroDivisionError):
            raise ImproperlyConfigured(f"{name}: {item.strip()!r} is not a rational number")
        if value == 1:
            raise ImproperlyConfigured(f"{name}: lambda must differ from 1")
        values.append(value)
    return tuple(values)


# Series padding: working precision n + 1 + UMBRA_PRECISION when set, 2n + 4 otherwise
UMBRA_PRECISION = _int_setting('UMBRA_PRECISION')

# Default --n-max for verify and verify-all
UMBRA_DEFAULT_N_MAX = _int_setting('UMBRA_DEFAULT_N_MAX', 8)

# Numeric values of lambda for spot checks of symbolic passes
UMBRA_SPOT_LAMBDAS = _lambda_list('UMBRA_SPOT_LAMBDAS', '-1,2')

UMBRA_LOG_LEVEL = os.getenv('UMBRA_LOG_LEVEL', 'WARNING').upper()


# Logging: stderr only, stdout carries command output

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'umbra': {
            'handlers': ['console'],
            'level': UMBRA_LOG_LEVEL,
        },
        **{
            app: {'handlers': ['console'], 'level': UMBRA_LOG_LEVEL, 'propagate': False}
            for app in ('coefficients', 'series', 'polyop', 'umbral', 'families', 'identities', 'core')
        },
    },
}
