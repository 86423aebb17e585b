from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith import RationalInterval, bernoulli_even
from ..exceptions import DomainError

__all__ = ["SkEnclosure", "em_partial", "sk_enclosure"]

MAX_ORDER = 3


@dataclass(frozen=True, slots=True)
class SkEnclosure:
    """Rational bracket of S_k = sum_(n>=k) 1/n^2."""

    k: int
    order: int
    interval: RationalInterval

    @property
    def lower(self) -> Fraction:
        return self.interval.lo

    @property
    def upper(self) -> Fraction:
        return self.interval.hi


def em_partial(k: int, r: int) -> Fraction:
    """1/k + 1/(2k^2) + sum_(j=1)^r B_(2j) / k^(2j+1)."""
    total = Fraction(1, k) + Fraction(1, 2 * k * k)
    for j in range(1, r + 1):
        total += bernoulli_even(j) / Fraction(k) ** (2 * j + 1)
    return total


def sk_enclosure(k: int, order: int = MAX_ORDER) -> SkEnclosure:
    """Brackets S_k between consecutive Euler-Maclaurin partial sums.

    The remainder alternates in sign, so S_k lies between the truncations
    after order - 1 and order Bernoulli terms. At order 3 the interval is
    [T_2, T_3] with width 1/(42 k^7).
    """
    if k < 1:
        raise DomainError(f"k must be positive. Got {k}.")
    if not 1 <= order <= MAX_ORDER:
        raise DomainError(f"order must be in 1..{MAX_ORDER}. Got {order}.")
    a, b = em_partial(k, order - 1), em_partial(k, order)
    return SkEnclosure(k, order, RationalInterval(min(a, b), max(a, b)))
