from . import asymptotics, fh, invariants, linalg  # noqa: F401  registers the properties
from .registry import (
    DEFAULT_RANGES,
    QUICK_RANGES,
    SUITE_NAMES,
    PropertyResult,
    Ranges,
    Status,
    register,
    registered_properties,
    run_suite,
)

__all__ = [
    "DEFAULT_RANGES",
    "QUICK_RANGES",
    "SUITE_NAMES",
    "PropertyResult",
    "Ranges",
    "Status",
    "register",
    "registered_properties",
    "run_suite",
]
