"""Closed-form sums of squared partial fractions.

For distinct shifts n_j,

    sum_(m>=1) (sum_j A_j / (m + n_j))^2
        = sum_j A_j^2 (zeta(2) - H2_(n_j))
        + 2 sum_(j<l) A_j A_l (H_(n_l) - H_(n_j)) / (n_l - n_j),

which lands in Q + Q pi^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..arith import PiQuadratic, harmonic, harmonic2
from ..exceptions import DimensionMismatchError, DomainError, DuplicateShiftsError

__all__ = ["PartialFractionSpec", "pf_coefficients_zw2", "squared_pf_sum"]


@dataclass(frozen=True, slots=True)
class PartialFractionSpec:
    amps: tuple[Fraction, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "amps", tuple(Fraction(a) for a in self.amps))
        object.__setattr__(self, "shifts", tuple(int(s) for s in self.shifts))
        if len(self.amps) != len(self.shifts):
            raise DimensionMismatchError(
                f"Got {len(self.amps)} amplitudes for {len(self.shifts)} shifts."
            )
        if len(set(self.shifts)) != len(self.shifts):
            raise DuplicateShiftsError(f"Shifts must be distinct. Got {self.shifts}.")
        if any(s < 0 for s in self.shifts):
            raise DomainError(f"Shifts must be non-negative. Got {self.shifts}.")

    def term(self, m: int) -> Fraction:
        """sum_j A_j / (m + n_j)."""
        return sum((a / (m + s) for a, s in zip(self.amps, self.shifts)), Fraction(0))


def pf_coefficients_zw2(k: int) -> PartialFractionSpec:
    """Partial fractions of the Sigma_k summand for (z-w)^2, halved.

    The summand is (2 m ((m+k-2)(m+k+1) - 3k^2 + 3k) / prod_j (m + k - 2 + j))^2,
    so Sigma_k = 4 * squared_pf_sum(pf_coefficients_zw2(k)).
    """
    if k < 2:
        raise DomainError(f"Partial fractions need k >= 2 for non-negative shifts. Got {k}.")
    k3, k2 = k**3, k**2
    amps = (
        Fraction(k3 - 3 * k2 + 2 * k, 2),
        Fraction(-3 * k3 + 6 * k2 - 5 * k + 2, 2),
        Fraction(3 * k3 - 3 * k2 + 2 * k, 2),
        Fraction(-k3 + k, 2),
    )
    return PartialFractionSpec(amps, (k - 2, k - 1, k, k + 1))


def squared_pf_sum(spec: PartialFractionSpec) -> PiQuadratic:
    if len(set(spec.shifts)) != len(spec.shifts):
        raise DuplicateShiftsError(f"Shifts must be distinct. Got {spec.shifts}.")
    total = PiQuadratic()
    for a, s in zip(spec.amps, spec.shifts):
        total += a * a * (PiQuadratic.zeta2() - harmonic2(s))
    pairs = combinations(zip(spec.amps, spec.shifts), 2)
    for (a_j, n_j), (a_l, n_l) in pairs:
        total += 2 * a_j * a_l * (harmonic(n_l) - harmonic(n_j)) / (n_l - n_j)
    return total
