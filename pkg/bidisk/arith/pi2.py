"""Certified rational enclosures of pi^2.

pi = 16 arctan(1/5) - 4 arctan(1/239) and each arctan(1/x) series is
alternating with decreasing terms, so consecutive partial sums bracket
it. Endpoints are then rounded outward onto a decimal grid to keep the
numbers small. The number of series terms and the grid both grow
monotonically as the requested width shrinks, so enclosures for
decreasing widths are nested.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from ..exceptions import DomainError
from .intervals import RationalInterval

__all__ = ["pi2_enclosure", "pi2_enclosure_digits"]

logger = logging.getLogger(__name__)


def _grid_digits(abs_err: Fraction) -> int:
    digits = 0
    while 4 > abs_err * 10**digits:
        digits += 1
    return digits


def _round_out(interval: RationalInterval, digits: int) -> RationalInterval:
    scale = 10**digits
    return RationalInterval(
        Fraction(floor(interval.lo * scale), scale), Fraction(ceil(interval.hi * scale), scale)
    )


@lru_cache(maxsize=256)
def pi2_enclosure(abs_err: Fraction) -> RationalInterval:
    """Returns [lo, hi] containing pi^2 with hi - lo <= abs_err."""
    abs_err = Fraction(abs_err)
    if abs_err <= 0:
        raise DomainError(f"pi2_enclosure needs abs_err > 0. Got {abs_err}.")
    target = abs_err / 2
    # partial sums and next (unsigned) terms of arctan(1/5), arctan(1/239)
    s5, s239 = Fraction(0), Fraction(0)
    terms = 0
    while True:
        t5 = Fraction(1, (2 * terms + 1) * 5 ** (2 * terms + 1))
        t239 = Fraction(1, (2 * terms + 1) * 239 ** (2 * terms + 1))
        sign = -1 if terms % 2 else 1
        next5, next239 = s5 + sign * t5, s239 + sign * t239
        atan5 = RationalInterval(min(s5, next5), max(s5, next5))
        atan239 = RationalInterval(min(s239, next239), max(s239, next239))
        pi = RationalInterval(16 * atan5.lo - 4 * atan239.hi, 16 * atan5.hi - 4 * atan239.lo)
        if terms > 0 and pi.lo > 0:
            pi2 = pi.square()
            if pi2.width <= target:
                break
        s5, s239 = next5, next239
        terms += 1
    digits = _grid_digits(abs_err)
    logger.debug("pi^2 enclosure: %s series terms, grid 10^-%s", terms, digits)
    return _round_out(pi2, digits)


def pi2_enclosure_digits(digits: int) -> RationalInterval:
    return pi2_enclosure(Fraction(1, 10**digits))
