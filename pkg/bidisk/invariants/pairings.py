from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import DomainError, IdentityViolationError
from ..linalg import (
    closed_cofactor_first_row_corner,
    closed_cofactor_last_row,
    closed_Dn,
    det_sequence,
    last_row_cofactors,
)
from ..symbols import HomogeneousSymbol, Submodule, autocorrelation_seq

__all__ = [
    "PairingValue",
    "pairing_cases_zw2",
    "pairing_generic",
    "pairing_value",
    "sigma_term_closed",
]


@dataclass(frozen=True, slots=True)
class PairingValue:
    """<w^k phi_n, z^k psi_n> for the orthonormal defect bases."""

    n: int
    k: int
    value: Fraction

    def __post_init__(self):
        if abs(self.value) > 1:
            raise IdentityViolationError(
                f"A pairing of unit vectors has modulus {abs(self.value)} > 1. "
                f"Got n={self.n}, k={self.k}."
            )

    @property
    def squared(self) -> Fraction:
        return self.value * self.value


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"n and k must be non-negative. Got n={n}, k={k}.")


def pairing_generic(p: HomogeneousSymbol, n: int, k: int) -> Fraction:
    """<w^k phi_n, z^k psi_n> from the cofactor rows of A^n.

    Equals sum_(i,j) A^n_(0,i) a_(j+k-i) A^n_(n,j) / (D_n D_(n+1)).
    """
    _check_nk(n, k)
    seq = autocorrelation_seq(p)
    band = len(seq) - 1
    last = last_row_cofactors(p, n)
    first = tuple(reversed(last.values))
    dets = det_sequence(p, n + 1)
    norm = dets[n] * dets[n + 1]
    total = Fraction(0)
    for j in range(n + 1):
        if not (a_nj := last[j]):
            continue
        for i in range(max(0, j + k - band), min(n, j + k + band) + 1):
            total += first[i] * seq[j + k - i] * a_nj
    return total / norm


def pairing_value(p: HomogeneousSymbol, n: int, k: int) -> PairingValue:
    return PairingValue(n, k, pairing_generic(p, n, k))


def _last_or_zero(n: int, k: int) -> Fraction:
    if 0 <= k <= n:
        return closed_cofactor_last_row(Submodule.ZW2, n, k)
    return Fraction(0)


def pairing_cases_zw2(n: int, k: int) -> Fraction:
    """The pairing for (z-w)^2 assembled from closed-form cofactors.

    Out-of-range cofactors count as 0, which yields each row of the case
    table: 0 for k >= n + 3, A^n_(0,n) A^n_(n,0) / (D_n D_(n+1)) at
    n = k - 2, and the two-term expression beyond.
    """
    _check_nk(n, k)
    d_n = closed_Dn(Submodule.ZW2, n)
    if k == 0:
        return _last_or_zero(n, 0) / d_n
    norm = d_n * closed_Dn(Submodule.ZW2, n + 1)
    corner_next = closed_cofactor_first_row_corner(Submodule.ZW2, n + 1)
    corner = closed_cofactor_first_row_corner(Submodule.ZW2, n)
    value = -corner_next * _last_or_zero(n, n + 1 - k) + corner * _last_or_zero(n, n + 2 - k)
    return value / norm


def sigma_term_closed(submodule: Submodule | str, k: int, n: int) -> Fraction:
    """Signed term whose square is the n-th summand of Sigma_k."""
    submodule = Submodule.coerce(submodule)
    lowest = k - 2 if submodule is Submodule.ZW2 else k - 1
    if k < 1 or n < max(lowest, 0):
        raise DomainError(
            f"Closed term for {submodule} needs k >= 1 and n >= {max(lowest, 0)}. "
            f"Got k={k}, n={n}."
        )
    if submodule is Submodule.ZW:
        return Fraction(n + 2 - k, (n + 1) * (n + 2))
    return Fraction(
        2 * (n + 3 - k) * (n * n + 5 * n + 4 + 3 * k - 3 * k * k),
        (n + 1) * (n + 2) * (n + 3) * (n + 4),
    )
