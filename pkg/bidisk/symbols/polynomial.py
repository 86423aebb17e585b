from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from .homogeneous import HomogeneousSymbol

__all__ = ["BivariatePoly", "h2_inner"]


class BivariatePoly:
    """Polynomial in z, w with rational coefficients.

    ``terms`` maps (z-exponent, w-exponent) to a non-zero coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction] | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {
            key: Fraction(value) for key, value in (terms or {}).items() if value
        }

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> BivariatePoly:
        return cls({(a, b): Fraction(coeff)})

    @classmethod
    def from_symbol(cls, p: HomogeneousSymbol) -> BivariatePoly:
        k = p.degree
        return cls({(j, k - j): c for j, c in enumerate(p.coeffs)})

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + value
        return BivariatePoly(terms)

    def __sub__(self, other: BivariatePoly) -> BivariatePoly:
        return self + other.scale(-1)

    def __mul__(self, other: BivariatePoly) -> BivariatePoly:
        terms: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return BivariatePoly(terms)

    def scale(self, factor) -> BivariatePoly:
        return BivariatePoly({key: value * factor for key, value in self.terms.items()})

    def shift(self, a: int, b: int) -> BivariatePoly:
        """Multiplies by z^a w^b."""
        return BivariatePoly({(i + a, j + b): c for (i, j), c in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"{c}*z^{i}*w^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"<BivariatePoly: {body or '0'}>"


def h2_inner(q1: BivariatePoly, q2: BivariatePoly) -> Fraction:
    """Inner product in H^2 of the bidisk.

    The monomials z^a w^b are orthonormal, so this is the sum of
    coefficient products over shared exponent pairs.
    """
    if len(q2.terms) < len(q1.terms):
        q1, q2 = q2, q1
    return sum(
        (c * q2.terms[key] for key, c in q1.terms.items() if key in q2.terms), Fraction(0)
    )
