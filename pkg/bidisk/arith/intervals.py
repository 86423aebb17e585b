from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import DomainError

__all__ = ["RationalInterval"]


@dataclass(frozen=True, slots=True)
class RationalInterval:
    """A closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"Empty interval. Got lo={self.lo} > hi={self.hi}.")

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def affine(self, scale, shift) -> RationalInterval:
        """Image of the interval under x -> scale * x + shift."""
        a, b = scale * self.lo + shift, scale * self.hi + shift
        return RationalInterval(min(a, b), max(a, b))

    def square(self) -> RationalInterval:
        if self.lo >= 0:
            return RationalInterval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return RationalInterval(self.hi * self.hi, self.lo * self.lo)
        return RationalInterval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def issubset(self, other: RationalInterval) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __float__(self) -> float:
        return float(self.midpoint)
