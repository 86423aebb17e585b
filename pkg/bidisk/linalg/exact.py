from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from ..exceptions import DimensionMismatchError, IndexOutOfRangeError

__all__ = ["cofactor_exact", "det_exact", "minor_rows"]

Matrix = Sequence[Sequence]


def _square_rows(M: Matrix) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in M]
    if any(len(row) != len(rows) for row in rows):
        raise DimensionMismatchError(
            f"Expected a square matrix. Got {len(rows)} rows of lengths "
            f"{sorted({len(row) for row in rows})}."
        )
    return rows


def _bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix, in place.

    Every intermediate entry is a minor of the input, so each division
    by the previous pivot is exact.
    """
    size = len(rows)
    if size == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k]), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            row_i, lead = rows[i], rows[i][k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * rows[k][j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * rows[size - 1][size - 1]


def det_exact(M: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix; det of 0x0 is 1.

    Each row is scaled to integers by the lcm of its denominators before
    Bareiss elimination, and the scale is divided out at the end.
    """
    rows = _square_rows(M)
    scale = 1
    int_rows = []
    for row in rows:
        lcm = math.lcm(*(x.denominator for x in row)) if row else 1
        scale *= lcm
        int_rows.append([x.numerator * (lcm // x.denominator) for x in row])
    return Fraction(_bareiss(int_rows), scale)


def minor_rows(M: Matrix, i: int, j: int) -> list[list[Fraction]]:
    """M with row i and column j removed."""
    rows = _square_rows(M)
    size = len(rows)
    if not (0 <= i < size and 0 <= j < size):
        raise IndexOutOfRangeError(
            f"Cofactor index ({i}, {j}) outside a {size}x{size} matrix."
        )
    return [[x for c, x in enumerate(row) if c != j] for r, row in enumerate(rows) if r != i]


def cofactor_exact(M: Matrix, i: int, j: int) -> Fraction:
    """(-1)^(i+j) times the determinant of the (i, j) minor."""
    return (-1) ** (i + j) * det_exact(minor_rows(M, i, j))
