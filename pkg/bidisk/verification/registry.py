from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import asdict, dataclass, replace
from enum import Enum

from ..exceptions import BidiskError, DomainError

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

logger = logging.getLogger(__name__)

SUITE_NAMES = ("linalg", "invariants", "asymptotics", "fh")


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True, slots=True)
class Ranges:
    """Sweep sizes for the properties. The defaults are the acceptance ranges."""

    det_n: int = 200
    oracle_n: int = 40
    f_n: int = 60
    defect_n: int = 12
    gram_n: int = 20
    minors_n: int = 100
    fh_alpha: int = 3
    fh_n: int = 60
    fh_vanish_n: int = 20
    fh_fit: tuple[int, int] = (50, 100)
    series_k: int = 40
    enclosure_k: int = 20
    truncations: tuple[int, ...] = (10, 100, 1000)
    pairing_n: int = 25
    eigen_n: int = 100
    sk_k: int = 10_000
    delta_k: int = 100
    analytic_k: int = 10**6
    residual_zw2: tuple[int, int] = (10, 200)
    residual_zw: tuple[int, int] = (100, 200)
    k_max: int = 500


DEFAULT_RANGES = Ranges()

QUICK_RANGES = Ranges(
    det_n=30,
    oracle_n=8,
    f_n=20,
    defect_n=4,
    gram_n=6,
    minors_n=20,
    fh_alpha=2,
    fh_n=12,
    fh_vanish_n=8,
    series_k=8,
    enclosure_k=4,
    truncations=(10, 100),
    pairing_n=8,
    eigen_n=20,
    sk_k=200,
    delta_k=20,
    analytic_k=10_000,
    residual_zw2=(10, 40),
    residual_zw=(100, 110),
    k_max=30,
)


@dataclass(frozen=True, slots=True)
class PropertyResult:
    suite: str
    property: str
    status: Status
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def as_dict(self) -> dict:
        data = asdict(self)
        data["status"] = self.status.value
        return data


@dataclass(frozen=True, slots=True)
class Property:
    suite: str
    name: str
    check: Callable[[Ranges], str | None]

    def run(self, ranges: Ranges) -> PropertyResult:
        try:
            counterexample = self.check(ranges)
        except BidiskError as e:
            counterexample = f"{type(e).__name__}: {e}"
        status = Status.PASS if counterexample is None else Status.FAIL
        logger.info("%s / %s: %s", self.suite, self.name, status.value)
        return PropertyResult(self.suite, self.name, status, counterexample)


_registry: dict[str, list[Property]] = {name: [] for name in SUITE_NAMES}


def register(suite: str, name: str):
    """Registers a property check. The check returns None or a counterexample."""

    def inner(check: Callable[[Ranges], str | None]):
        _registry[suite].append(Property(suite, name, check))
        return check

    return inner


def registered_properties(suite: str = "all") -> list[Property]:
    if suite == "all":
        return [prop for name in SUITE_NAMES for prop in _registry[name]]
    if suite not in _registry:
        raise DomainError(
            f"Unknown suite {suite!r}. Expected one of {', '.join(('all',) + SUITE_NAMES)}."
        )
    return list(_registry[suite])


def run_suite(
    suite: str = "all", ranges: Ranges = DEFAULT_RANGES, k_max: int | None = None
) -> list[PropertyResult]:
    if k_max is not None:
        ranges = replace(ranges, k_max=k_max)
    return [prop.run(ranges) for prop in registered_properties(suite)]
