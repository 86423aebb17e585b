from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import total_ordering

from ..exceptions import RefinementBudgetExceeded
from ..precision import PI2_DIGITS
from ..utils import get_sign_max_digits
from .intervals import RationalInterval
from .pi2 import pi2_enclosure

__all__ = ["PiQuadratic", "Sign", "qpi2_sign"]

logger = logging.getLogger(__name__)


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> Sign:
        return cls((value > 0) - (value < 0))


@total_ordering
@dataclass(frozen=True, slots=True)
class PiQuadratic:
    """Exact value ``pi2_coeff * pi^2 + const_coeff`` with rational parts.

    pi^2 is irrational, so the representation is unique and equality
    is component-wise.
    """

    pi2_coeff: Fraction = Fraction(0)
    const_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "pi2_coeff", Fraction(self.pi2_coeff))
        object.__setattr__(self, "const_coeff", Fraction(self.const_coeff))

    @classmethod
    def zeta2(cls) -> PiQuadratic:
        """zeta(2) = pi^2 / 6."""
        return cls(Fraction(1, 6), Fraction(0))

    @classmethod
    def rational(cls, value) -> PiQuadratic:
        return cls(Fraction(0), Fraction(value))

    @property
    def is_rational(self) -> bool:
        return self.pi2_coeff == 0

    def _coerce(self, other) -> PiQuadratic | None:
        if isinstance(other, PiQuadratic):
            return other
        if isinstance(other, (int, Fraction)):
            return PiQuadratic.rational(other)
        return None

    def __add__(self, other):
        if (other := self._coerce(other)) is None:
            return NotImplemented
        return PiQuadratic(
            self.pi2_coeff + other.pi2_coeff, self.const_coeff + other.const_coeff
        )

    __radd__ = __add__

    def __neg__(self):
        return PiQuadratic(-self.pi2_coeff, -self.const_coeff)

    def __sub__(self, other):
        if (other := self._coerce(other)) is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if (other := self._coerce(other)) is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return PiQuadratic(self.pi2_coeff * other, self.const_coeff * other)

    __rmul__ = __mul__

    def __lt__(self, other):
        if (other := self._coerce(other)) is None:
            return NotImplemented
        return qpi2_sign(self - other) is Sign.NEGATIVE

    def enclosure(self, abs_err: Fraction | None = None) -> RationalInterval:
        """Rational interval containing the value."""
        if abs_err is None:
            abs_err = Fraction(1, 10 ** int(PI2_DIGITS))
        return pi2_enclosure(abs_err).affine(self.pi2_coeff, self.const_coeff)

    def to_fraction(self, abs_err: Fraction | None = None) -> Fraction:
        """Rational approximation within |pi2_coeff| * abs_err of the value."""
        if self.is_rational:
            return self.const_coeff
        return self.enclosure(abs_err).midpoint

    def __float__(self) -> float:
        if self.is_rational:
            return float(self.const_coeff)
        digits = int(PI2_DIGITS)
        max_digits = get_sign_max_digits()
        while True:
            interval = self.enclosure(Fraction(1, 10**digits))
            # enough digits to pin down the double nearest the value
            if interval.width <= abs(interval.midpoint) / 2**60 or digits >= max_digits:
                return float(interval.midpoint)
            digits = min(2 * digits, max_digits)

    def __str__(self):
        return f"{self.pi2_coeff}*pi^2 + {self.const_coeff}"


def qpi2_sign(value: PiQuadratic, digits: int | None = None) -> Sign:
    """Returns the exact sign of a*pi^2 + b.

    With a != 0 the value is irrational and non-zero, so halving the
    pi^2 enclosure width terminates; the cap of BIDISK_SIGN_MAX_DIGITS
    digits only guards against runaway refinement.
    """
    if value.is_rational:
        return Sign.of(value.const_coeff)
    digits = int(PI2_DIGITS) if digits is None else digits
    floor_width = Fraction(1, 10 ** get_sign_max_digits())
    abs_err = Fraction(1, 10**digits)
    while True:
        interval = value.enclosure(abs_err)
        if interval.excludes_zero():
            return Sign.POSITIVE if interval.lo > 0 else Sign.NEGATIVE
        abs_err /= 2
        if abs_err < floor_width:
            raise RefinementBudgetExceeded(
                f"Sign of {value} undecided at pi^2 width {float(abs_err * 2):.3g}. "
                "Raise BIDISK_SIGN_MAX_DIGITS to refine further."
            )
        logger.debug("Refining sign of %s to pi^2 width %s", value, float(abs_err))
