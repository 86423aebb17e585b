from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exceptions import DimensionMismatchError
from .homogeneous import HomogeneousSymbol
from .polynomial import BivariatePoly

__all__ = [
    "AutocorrelationSeq",
    "ToeplitzGram",
    "autocorrelation",
    "autocorrelation_seq",
    "defect_basis_unnormalized",
    "gram_matrix",
]


def autocorrelation(p: HomogeneousSymbol, m: int) -> Fraction:
    """a_m = <p w^m, p z^m> = sum_i c_{i+m} c_i.

    This is the m-th Fourier coefficient of |p(z, 1)|^2 on the circle.
    """
    m = abs(m)
    return sum(
        (p.coeffs[i + m] * p.coeffs[i] for i in range(p.degree + 1 - m)), Fraction(0)
    )


@dataclass(frozen=True, slots=True)
class AutocorrelationSeq:
    """a_0, ..., a_k of a symbol; a_{-m} = a_m and a_m = 0 beyond the degree."""

    values: tuple[Fraction, ...]

    def __getitem__(self, m: int) -> Fraction:
        m = abs(m)
        if m < len(self.values):
            return self.values[m]
        return Fraction(0)

    @property
    def bandwidth(self) -> int:
        """Largest m with a_m != 0."""
        return max(m for m, value in enumerate(self.values) if value)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@lru_cache(maxsize=64)
def autocorrelation_seq(p: HomogeneousSymbol) -> AutocorrelationSeq:
    return AutocorrelationSeq(tuple(autocorrelation(p, m) for m in range(p.degree + 1)))


@dataclass(frozen=True, slots=True)
class ToeplitzGram:
    """The (n+1) x (n+1) Gram matrix A^n with entry (i, j) = a_{i-j}.

    Entry (i, j) is <p z^j w^(n-j), p z^i w^(n-i)>.
    """

    n: int
    symbol_seq: AutocorrelationSeq

    @property
    def size(self) -> int:
        return self.n + 1

    def entry(self, i: int, j: int) -> Fraction:
        return self.symbol_seq[i - j]

    def rows(self) -> list[list[Fraction]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]


def gram_matrix(p: HomogeneousSymbol, n: int) -> ToeplitzGram:
    return ToeplitzGram(n, autocorrelation_seq(p))


def defect_basis_unnormalized(
    p: HomogeneousSymbol,
    n: int,
    cof0: Sequence[Fraction],
    cofn: Sequence[Fraction],
) -> tuple[BivariatePoly, BivariatePoly]:
    """Returns (Phi_n, Psi_n) built from the first and last cofactor rows of A^n.

    Phi_n is orthogonal to z M and Psi_n to w M in degree n + deg p. Both
    have squared norm D_n D_(n+1); callers normalize.
    """
    if len(cof0) != n + 1 or len(cofn) != n + 1:
        raise DimensionMismatchError(
            f"Cofactor rows must have length {n + 1}. Got {len(cof0)} and {len(cofn)}."
        )
    base = BivariatePoly.from_symbol(p)
    phi = BivariatePoly()
    psi = BivariatePoly()
    for j in range(n + 1):
        shifted = base.shift(j, n - j)
        phi = phi + shifted.scale(cof0[j])
        psi = psi + shifted.scale(cofn[j])
    return phi, psi
