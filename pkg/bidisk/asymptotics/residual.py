from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import DomainError
from ..invariants.sigma import sigma_closed
from ..precision import PI2_DIGITS
from ..symbols import Submodule
from ..utils import get_residual_bound
from .expansions import asymptote_terms

__all__ = ["ResidualRow", "asymptote_residual", "residual_bounded", "residual_times_k3"]


@dataclass(frozen=True, slots=True)
class ResidualRow:
    k: int
    sigma_float: float
    asym_float: float
    residual_times_k3: float


def _sigma_fraction(submodule: Submodule, k: int) -> Fraction:
    value = sigma_closed(submodule, k)
    # Sigma_k is small while its pi^2 coefficient grows like k^6
    digits = int(PI2_DIGITS) + len(str(abs(value.pi2_coeff.numerator)))
    return value.to_fraction(Fraction(1, 10**digits))


def residual_times_k3(submodule: Submodule | str, k: int) -> Fraction:
    """(Sigma_k - two-term asymptote) * k^3, from a rational approximation of Sigma_k."""
    submodule = Submodule.coerce(submodule)
    return (_sigma_fraction(submodule, k) - asymptote_terms(submodule, k)) * k**3


def asymptote_residual(submodule: Submodule | str, k_lo: int, k_hi: int) -> list[ResidualRow]:
    submodule = Submodule.coerce(submodule)
    if not 1 <= k_lo < k_hi:
        raise DomainError(f"Expected 1 <= k_lo < k_hi. Got k_lo={k_lo}, k_hi={k_hi}.")
    rows = []
    for k in range(k_lo, k_hi + 1):
        sigma = _sigma_fraction(submodule, k)
        asym = asymptote_terms(submodule, k)
        rows.append(ResidualRow(k, float(sigma), float(asym), float((sigma - asym) * k**3)))
    return rows


def residual_bounded(rows: list[ResidualRow], bound: float | None = None) -> bool:
    """True if every |residual * k^3| is at most BIDISK_RESIDUAL_BOUND."""
    bound = get_residual_bound() if bound is None else bound
    return all(abs(row.residual_times_k3) <= bound for row in rows)
