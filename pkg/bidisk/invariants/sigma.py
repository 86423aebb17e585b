from __future__ import annotations

import logging
from fractions import Fraction

from ..arith import PiQuadratic, harmonic2
from ..exceptions import DomainError, IdentityViolationError
from ..symbols import HomogeneousSymbol, Submodule, autocorrelation_seq
from .pairings import pairing_value, sigma_term_closed

__all__ = [
    "P_poly",
    "Q_poly",
    "has_tail_bound",
    "hs_identities",
    "s_tail",
    "sigma_closed",
    "sigma_partial",
    "sigma_tail_bound",
]

logger = logging.getLogger(__name__)

Target = Submodule | str | HomogeneousSymbol


def P_poly(k: int) -> int:
    return 2 * (10 * k**6 - 30 * k**5 + 49 * k**4 - 48 * k**3 + 29 * k**2 - 10 * k + 2)


def Q_poly(k: int) -> Fraction:
    return Fraction(60 * k**5 - 150 * k**4 + 214 * k**3 - 171 * k**2 + 77 * k - 15, 3)


def s_tail(k: int) -> PiQuadratic:
    """S_k = sum_(n>=k) 1/n^2 = pi^2/6 - H2_(k-1)."""
    if k < 1:
        raise DomainError(f"S_k needs k >= 1. Got {k}.")
    return PiQuadratic(Fraction(1, 6), -harmonic2(k - 1))


def sigma_closed(submodule: Submodule | str, k: int) -> PiQuadratic:
    """Exact Sigma_k in Q + Q pi^2."""
    submodule = Submodule.coerce(submodule)
    if k < 0:
        raise DomainError(f"k must be non-negative. Got {k}.")
    if submodule is Submodule.ZW2:
        if k == 0:
            return PiQuadratic(Fraction(2, 3), Fraction(-4))
        return P_poly(k) * s_tail(k) - Q_poly(k)
    if k == 0:
        return PiQuadratic.zeta2()
    return (2 * k * k - 2 * k + 1) * s_tail(k) - (2 * k - 1)


def _first_nonzero_term(submodule: Submodule, k: int) -> int:
    if submodule is Submodule.ZW2:
        return max(k - 2, 0)
    return max(k - 1, 0)


def sigma_partial(target: Target, k: int, N: int) -> Fraction:
    """sum_(n=0)^N |<w^k phi_n, z^k psi_n>|^2.

    Named submodules use the closed summands; any other symbol goes
    through the cofactor pairing.
    """
    if k < 0 or N < 0:
        raise DomainError(f"k and N must be non-negative. Got k={k}, N={N}.")
    if isinstance(target, HomogeneousSymbol):
        return sum((pairing_value(target, n, k).squared for n in range(N + 1)), Fraction(0))
    submodule = Submodule.coerce(target)
    if k == 0:
        # |A_(0,n) / D_n|^2
        if submodule is Submodule.ZW2:
            terms = (Fraction(2, n + 2) ** 2 for n in range(N + 1))
        else:
            terms = (Fraction(1, n + 1) ** 2 for n in range(N + 1))
        return sum(terms, Fraction(0))
    start = _first_nonzero_term(submodule, k)
    return sum(
        (sigma_term_closed(submodule, k, n) ** 2 for n in range(start, N + 1)), Fraction(0)
    )


def has_tail_bound(target: Target) -> bool:
    """Whether ``sigma_tail_bound`` certifies a remainder for ``target``.

    Raw symbols qualify only when p is a monomial, where every pairing
    past n = 0 vanishes.
    """
    if isinstance(target, HomogeneousSymbol):
        return autocorrelation_seq(target).bandwidth == 0
    return True


def sigma_tail_bound(target: Target, k: int, N: int) -> Fraction:
    """Certified U with sum_(n>N) |pairing|^2 <= U."""
    if k < 0 or N < 0:
        raise DomainError(f"k and N must be non-negative. Got k={k}, N={N}.")
    if isinstance(target, HomogeneousSymbol):
        if not has_tail_bound(target):
            raise DomainError(
                f"No certified tail bound for symbol {target}. "
                "Only monomials and the named submodules have one."
            )
        # A^n is diagonal and the pairing is a_(n+k) / a_0
        return Fraction(0)
    submodule = Submodule.coerce(target)
    if submodule is Submodule.ZW:
        # every summand is at most 1/(n+1)^2
        return Fraction(1, N + 1)
    if k == 0:
        return Fraction(4, N + 2)
    # |term| <= 2/(n+2) + 6k^2/(n+1)^3
    return Fraction(8, N + 2) + Fraction(72 * k**4, 5 * (N + 1) ** 5)


def hs_identities(
    submodule: Submodule | str,
) -> tuple[PiQuadratic, PiQuadratic, PiQuadratic]:
    """(Sigma_0, Sigma_1, ||C||_HS^2) with Sigma_0 - Sigma_1 = 1 checked exactly."""
    sigma0 = sigma_closed(submodule, 0)
    sigma1 = sigma_closed(submodule, 1)
    if sigma0 - sigma1 != PiQuadratic.rational(1):
        raise IdentityViolationError(
            f"Sigma_0 - Sigma_1 = {sigma0 - sigma1} for {submodule}. Expected 1."
        )
    return sigma0, sigma1, sigma0 + sigma1
