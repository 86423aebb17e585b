from __future__ import annotations

import os
from typing import Any

from django.conf import settings

DEFAULT_PI2_DIGITS = 40
DEFAULT_SIGN_MAX_DIGITS = 200
DEFAULT_RESIDUAL_BOUND = 10


def get_setting(name: str, default: Any = None) -> Any:
    """Returns ``settings.<name>`` or ``default``.

    The engine is usable as a plain library, so an unconfigured
    settings object falls back to the default instead of raising.
    """
    if not settings.configured:
        return default
    return getattr(settings, name, default)


def get_pi2_digits() -> int:
    """Default number of decimal digits for pi^2 enclosures.

    The environment variable BIDISK_PI2_DIGITS takes priority over
    settings.BIDISK_PI2_DIGITS.
    """
    if value := os.environ.get("BIDISK_PI2_DIGITS"):
        return int(value)
    return int(get_setting("BIDISK_PI2_DIGITS", DEFAULT_PI2_DIGITS))


def get_sign_max_digits() -> int:
    return int(get_setting("BIDISK_SIGN_MAX_DIGITS", DEFAULT_SIGN_MAX_DIGITS))


def get_residual_bound() -> float:
    return float(get_setting("BIDISK_RESIDUAL_BOUND", DEFAULT_RESIDUAL_BOUND))


def get_debug() -> bool:
    return bool(get_setting("BIDISK_DEBUG", False))
