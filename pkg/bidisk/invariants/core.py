from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import DomainError, IdentityViolationError, SingularGramError
from ..linalg import (
    closed_cofactor_first_row_corner,
    closed_Dn,
    det_sequence,
    last_row_cofactors,
)
from ..symbols import HomogeneousSymbol, Submodule

__all__ = [
    "CoreSpectrum",
    "EigenRow",
    "core_eigenvalues",
    "second_largest_eigenvalue",
]


@dataclass(frozen=True, slots=True)
class EigenRow:
    """The pair of core-operator eigenvalues +-sqrt(lambda_sq) at level n."""

    n: int
    lambda_sq: Fraction

    @property
    def lambda_float(self) -> float:
        return math.sqrt(self.lambda_sq)


@dataclass(frozen=True, slots=True)
class CoreSpectrum:
    rows: tuple[EigenRow, ...]
    fixed: tuple[int, int] = (0, 1)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, index: int) -> EigenRow:
        return self.rows[index]


def _levels(target, n_max: int) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """(D_(n-1), D_n, D_(n+1), A^n_(0,n)) for 1 <= n <= n_max."""
    if isinstance(target, HomogeneousSymbol):
        dets = det_sequence(target, n_max + 1)
        return [
            (dets[n - 1], dets[n], dets[n + 1], last_row_cofactors(target, n)[0])
            for n in range(1, n_max + 1)
        ]
    submodule = Submodule.coerce(target)
    return [
        (
            closed_Dn(submodule, n - 1),
            closed_Dn(submodule, n),
            closed_Dn(submodule, n + 1),
            closed_cofactor_first_row_corner(submodule, n),
        )
        for n in range(1, n_max + 1)
    ]


def core_eigenvalues(target, n_max: int) -> CoreSpectrum:
    """Nonzero spectrum of the core operator besides the fixed eigenvalues 0 and 1.

    lambda_n^2 = 1 - (D_n^2 - (A^n_(0,n))^2)^2 / (D_(n-1) D_n^2 D_(n+1)).
    """
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1. Got {n_max}.")
    rows = []
    for n, (d_prev, d_n, d_next, corner) in enumerate(_levels(target, n_max), start=1):
        denominator = d_prev * d_n * d_n * d_next
        if denominator == 0:
            raise SingularGramError(f"A leading minor around level {n} vanishes.")
        rows.append(EigenRow(n, 1 - (d_n * d_n - corner * corner) ** 2 / denominator))
    return CoreSpectrum(tuple(rows))


def _exact_sqrt(value: Fraction) -> Fraction | None:
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def second_largest_eigenvalue(submodule: Submodule | str) -> Fraction:
    """Largest core eigenvalue after 1; it sits at level n = 1."""
    row = core_eigenvalues(submodule, 1)[0]
    if (root := _exact_sqrt(row.lambda_sq)) is None:
        raise IdentityViolationError(
            f"lambda_1^2 = {row.lambda_sq} for {submodule} is not a rational square."
        )
    return root
