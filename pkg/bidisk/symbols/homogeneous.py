from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..exceptions import DomainError, SymbolParseError

__all__ = ["HomogeneousSymbol", "Submodule", "parse_symbol"]


@dataclass(frozen=True, slots=True)
class HomogeneousSymbol:
    """Homogeneous polynomial p = sum_j c_j z^j w^(k-j) with rational c_j.

    ``coeffs`` is (c_0, ..., c_k), ascending in the power of z. The zero
    polynomial generates no submodule and is rejected.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise SymbolParseError("A homogeneous symbol needs at least one coefficient.")
        if not any(coeffs):
            raise SymbolParseError("The zero polynomial does not generate a submodule.")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        if 0 <= j <= self.degree:
            return self.coeffs[j]
        return Fraction(0)

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def parse_symbol(text: str) -> HomogeneousSymbol:
    """Parses "c_0,c_1,...,c_k", e.g. "1,-2,1" for (z-w)^2."""
    parts = [part.strip() for part in str(text).split(",")]
    try:
        coeffs = tuple(Fraction(part) for part in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise SymbolParseError(
            f"Invalid symbol {text!r}. Expected comma-separated rationals. {e}"
        )
    return HomogeneousSymbol(coeffs)


class Submodule(Enum):
    """The two submodules with closed forms: [z-w] and [(z-w)^2]."""

    ZW = "zw"
    ZW2 = "zw2"

    @classmethod
    def coerce(cls, value) -> Submodule:
        try:
            return cls(value)
        except ValueError:
            raise DomainError(
                f"Unknown submodule {value!r}. Expected one of 'zw', 'zw2'."
            )

    @property
    def symbol(self) -> HomogeneousSymbol:
        if self is Submodule.ZW:
            return HomogeneousSymbol((Fraction(-1), Fraction(1)))
        return HomogeneousSymbol((Fraction(1), Fraction(-2), Fraction(1)))

    @property
    def alpha(self) -> int:
        """Exponent of the symbol |1 - z|^(2 alpha) of the Gram matrices."""
        return 1 if self is Submodule.ZW else 2

    def __str__(self):
        return self.value
