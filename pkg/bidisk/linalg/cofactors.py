from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..exceptions import IdentityViolationError, debug_raise_ansatz_mismatch
from ..symbols import (
    AutocorrelationSeq,
    HomogeneousSymbol,
    ToeplitzGram,
    autocorrelation_seq,
    gram_matrix,
)
from .determinants import banded_factor, det_sequence

__all__ = [
    "CofactorRow",
    "RowIndex",
    "expansion_mismatch",
    "first_row_cofactors",
    "last_row_cofactors",
    "power_of_one_minus_z",
]

logger = logging.getLogger(__name__)


class RowIndex(Enum):
    FIRST = "first"
    LAST = "last"


@dataclass(frozen=True, slots=True)
class CofactorRow:
    n: int
    row_index: RowIndex
    values: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def row(self) -> int:
        return 0 if self.row_index is RowIndex.FIRST else self.n


def expansion_mismatch(
    gram: ToeplitzGram, values, row: int, det: Fraction
) -> int | None:
    """First row i where sum_j a_(i-j) values[j] != delta_(i,row) det, or None."""
    size = gram.size
    band = len(gram.symbol_seq) - 1
    for i in range(size):
        lo, hi = max(0, i - band), min(size, i + band + 1)
        total = sum((gram.entry(i, j) * values[j] for j in range(lo, hi)), Fraction(0))
        if total != (det if i == row else 0):
            return i
    return None


def power_of_one_minus_z(seq: AutocorrelationSeq) -> int | None:
    """alpha if ``seq`` is proportional to the coefficients of |1 - z|^(2 alpha).

    Those are (-1)^m C(2 alpha, alpha + m). Returns None otherwise, and
    for alpha = 0, where there is nothing to fit.
    """
    alpha = seq.bandwidth
    if alpha < 1:
        return None
    scale = seq[0] / comb(2 * alpha, alpha)
    for m in range(alpha + 1):
        if seq[m] != scale * (-1) ** m * comb(2 * alpha, alpha + m):
            return None
    return alpha


def _ansatz_row(alpha: int, n: int, d_n: Fraction) -> list[Fraction]:
    """Cofactors A^n_(n,j) as P(j + 1) for a polynomial P of degree 2 alpha - 1.

    Away from the boundary the cofactor expansion is the difference
    equation of (1 - z)^(2 alpha), so the row is polynomial in j. The
    boundary rows force the roots 1 - alpha..0 and n + 2..n + alpha, and
    A^n_(n,n) = D_n fixes the scale.
    """
    roots = list(range(1 - alpha, 1)) + list(range(n + 2, n + alpha + 1))

    def shape(x: int) -> int:
        value = 1
        for r in roots:
            value *= x - r
        return value

    scale = d_n / shape(n + 1)
    return [scale * shape(j + 1) for j in range(n + 1)]


def _exact_quotient(num, den):
    if isinstance(num, int) and isinstance(den, int):
        quotient, remainder = divmod(num, den)
        if not remainder:
            return quotient
    return Fraction(num, den)


def _banded_row(p: HomogeneousSymbol, n: int, d_n: Fraction) -> list[Fraction]:
    """Solves A^n x = D_(n+1) e_n by back substitution.

    A^n = L U with L unit lower triangular, so x_n = D_n and
    x_i = -sum_(j>i) B_(i,j) x_j / D_(i+1) over the bordered minors B of
    the banded factor. Integer symbols stay in integer arithmetic.
    """
    bordered = banded_factor(p, n + 1).bordered
    values = [0] * (n + 1)
    values[n] = d_n.numerator if d_n.denominator == 1 else d_n
    for i in range(n - 1, -1, -1):
        row = bordered[i]
        total = sum(b * values[j] for j, b in row.items() if i < j <= n)
        values[i] = _exact_quotient(-total, row[i])
    return [Fraction(v) for v in values]


@lru_cache(maxsize=1024)
def last_row_cofactors(p: HomogeneousSymbol, n: int) -> CofactorRow:
    """The cofactor row (A^n_(n,0), ..., A^n_(n,n)) of the Gram matrix A^n.

    It solves A^n x = D_(n+1) e_n. Symbols of the form c |1 - z|^(2 alpha)
    take the polynomial fast path, which is always checked against the
    full cofactor expansion. Anything else, or a failed check, goes
    through the banded factor of ``det_sequence``.
    """
    dets = det_sequence(p, n + 1)
    d_n, d_next = dets[n], dets[n + 1]
    if (alpha := power_of_one_minus_z(autocorrelation_seq(p))) is not None:
        values = _ansatz_row(alpha, n, d_n)
        bad_row = expansion_mismatch(gram_matrix(p, n), values, n, d_next)
        if bad_row is None:
            return CofactorRow(n, RowIndex.LAST, tuple(values))
        debug_raise_ansatz_mismatch(p, n, bad_row)
        logger.debug(
            "Polynomial ansatz failed on row %s for symbol %s, n=%s. Using the banded solve.",
            bad_row,
            p,
            n,
        )
    return CofactorRow(n, RowIndex.LAST, tuple(_banded_row(p, n, d_n)))


def first_row_cofactors(p: HomogeneousSymbol, n: int) -> CofactorRow:
    """(A^n_(0,0), ..., A^n_(0,n)) from the last row by persymmetry."""
    last = last_row_cofactors(p, n)
    values = tuple(reversed(last.values))
    d_next = det_sequence(p, n + 1)[n + 1]
    if (bad_row := expansion_mismatch(gram_matrix(p, n), values, 0, d_next)) is not None:
        raise IdentityViolationError(
            f"Reversed cofactor row fails the expansion on row {bad_row}. "
            f"Got symbol {p} and n={n}."
        )
    return CofactorRow(n, RowIndex.FIRST, values)
