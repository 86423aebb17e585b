from __future__ import annotations

from fractions import Fraction

from ..exceptions import DomainError
from ..symbols import Submodule

__all__ = ["ASYMPTOTE_COEFFS", "asymptote_terms"]

# coefficients of 1/k, 1/k^2, ...
ASYMPTOTE_COEFFS = {
    Submodule.ZW2: (Fraction(92, 105), Fraction(46, 105)),
    Submodule.ZW: (Fraction(1, 3), Fraction(1, 6), Fraction(1, 10), Fraction(1, 15)),
}


def asymptote_terms(submodule: Submodule | str, k: int, terms: int = 2) -> Fraction:
    """Large-k expansion of Sigma_k truncated after ``terms`` powers of 1/k."""
    submodule = Submodule.coerce(submodule)
    coeffs = ASYMPTOTE_COEFFS[submodule]
    if k < 1:
        raise DomainError(f"k must be positive. Got {k}.")
    if not 1 <= terms <= len(coeffs):
        raise DomainError(
            f"{submodule} has {len(coeffs)} known expansion terms. Got terms={terms}."
        )
    return sum((c / Fraction(k) ** (i + 1) for i, c in enumerate(coeffs[:terms])), Fraction(0))
