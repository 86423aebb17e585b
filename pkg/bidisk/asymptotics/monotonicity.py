from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import PiQuadratic, Sign, qpi2_sign
from ..exceptions import CertificateFailure, DomainError, IdentityViolationError
from ..invariants.sigma import s_tail, sigma_closed
from ..symbols import Submodule
from .enclosures import sk_enclosure

__all__ = [
    "ANALYTIC_BOUND_FROM",
    "MonotonicityCertificate",
    "R_rational",
    "T_poly",
    "analytic_bound_identity",
    "analytic_lower_bound",
    "analytic_lower_bound_check",
    "delta_k",
    "monotonicity_certificate",
]

logger = logging.getLogger(__name__)

ANALYTIC_BOUND_FROM = 3


def T_poly(k: int) -> int:
    return 8 * k * (15 * k**4 + 24 * k**2 + 5)


def R_rational(k: int) -> Fraction:
    return (
        120 * k**4
        + 60 * k**3
        + 212 * k**2
        + 96 * k
        + 68
        + Fraction(20, k)
        + Fraction(4, k * k)
    )


def delta_k(submodule: Submodule | str, k: int) -> PiQuadratic:
    """Delta_k = Sigma_k - Sigma_(k+1), exact.

    Delta_0 = 1. For (z-w)^2 and k >= 1 the difference is also checked
    against R(k) - T(k) S_k.
    """
    submodule = Submodule.coerce(submodule)
    if k < 0:
        raise DomainError(f"k must be non-negative. Got {k}.")
    value = sigma_closed(submodule, k) - sigma_closed(submodule, k + 1)
    if submodule is Submodule.ZW2 and k >= 1:
        other = R_rational(k) - T_poly(k) * s_tail(k)
        if value != other:
            raise IdentityViolationError(
                f"Delta_{k} = {value} from closed forms but R - T S_k = {other}."
            )
    return value


def analytic_lower_bound(k: int) -> Fraction:
    """92/(105k^2) - 68/(21k^4) - 20/(21k^6), a strict lower bound of Delta_k."""
    return Fraction(92, 105 * k**2) - Fraction(68, 21 * k**4) - Fraction(20, 21 * k**6)


def analytic_lower_bound_check(k: int) -> bool:
    """Positivity of the lower bound, cleared of denominators by 105 k^6."""
    if k < ANALYTIC_BOUND_FROM:
        raise DomainError(f"The analytic bound is claimed for k >= 3. Got {k}.")
    return 92 * k**4 - 340 * k**2 - 100 > 0


def analytic_bound_identity(k: int) -> bool:
    """R(k) - T(k) U_k equals the analytic lower bound exactly.

    U_k is the upper end of the order-3 enclosure of S_k.
    """
    if k < 1:
        raise DomainError(f"k must be positive. Got {k}.")
    upper = sk_enclosure(k).upper
    return R_rational(k) - T_poly(k) * upper == analytic_lower_bound(k)


@dataclass(frozen=True, slots=True)
class MonotonicityCertificate:
    submodule: Submodule
    k_checked_max: int
    exact_signs: tuple[Sign, ...]
    analytic_bound_from: int | None = None
    identity_checked: tuple[int, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return all(sign is Sign.POSITIVE for sign in self.exact_signs)


def monotonicity_certificate(
    submodule: Submodule | str, k_max: int
) -> MonotonicityCertificate:
    """Certifies Sigma_0 > Sigma_1 > ... > Sigma_(k_max + 1) with exact signs.

    For (z-w)^2 the analytic bound and its identity with R - T U_k are
    checked for 3 <= k <= k_max as well. Raises CertificateFailure at
    the smallest failing k.
    """
    submodule = Submodule.coerce(submodule)
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1. Got {k_max}.")
    signs = []
    for k in range(k_max + 1):
        sign = qpi2_sign(delta_k(submodule, k))
        if sign is not Sign.POSITIVE:
            raise CertificateFailure(f"Delta_{k} of {submodule} has sign {sign.name}.", k=k)
        signs.append(sign)
    bound_from = None
    checked = ()
    if submodule is Submodule.ZW2:
        checked = tuple(range(ANALYTIC_BOUND_FROM, k_max + 1))
        for k in checked:
            if not (analytic_lower_bound_check(k) and analytic_bound_identity(k)):
                raise CertificateFailure(f"Analytic lower bound fails at k={k}.", k=k)
        bound_from = ANALYTIC_BOUND_FROM
    logger.debug("Certified %s monotone up to k=%s", submodule, k_max)
    return MonotonicityCertificate(submodule, k_max, tuple(signs), bound_from, checked)
