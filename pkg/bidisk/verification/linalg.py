from __future__ import annotations

from fractions import Fraction

from ..linalg import (
    closed_cofactor_first_row_corner,
    closed_cofactor_last_row,
    closed_Dn,
    cofactor_exact,
    det_exact,
    det_sequence,
    expansion_mismatch,
    f_sequence,
    first_row_cofactors,
    last_row_cofactors,
)
from ..symbols import (
    BivariatePoly,
    Submodule,
    defect_basis_unnormalized,
    gram_matrix,
    h2_inner,
)
from .registry import Ranges, register


@register("linalg", "closed-form determinants")
def check_closed_determinants(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        dets = det_sequence(submodule.symbol, ranges.det_n + 1)
        for n in range(ranges.det_n + 1):
            if dets[n] != closed_Dn(submodule, n):
                return f"{submodule} n={n}: D_n={dets[n]} differs from the closed form"
        for n in range(1, ranges.oracle_n + 1):
            if (value := det_exact(gram_matrix(submodule.symbol, n - 1).rows())) != dets[n]:
                return f"{submodule} n={n}: det_exact={value}, det_sequence={dets[n]}"
    return None


@register("linalg", "positive leading minors")
def check_positive_minors(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        dets = det_sequence(submodule.symbol, ranges.minors_n + 1)
        if (bad := next((n for n, d in enumerate(dets) if d <= 0), None)) is not None:
            return f"{submodule} D_{bad}={dets[bad]}"
    return None


@register("linalg", "cofactor oracle")
def check_cofactor_oracle(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        p = submodule.symbol
        for n in range(ranges.oracle_n + 1):
            rows = gram_matrix(p, n).rows()
            last, first = last_row_cofactors(p, n), first_row_cofactors(p, n)
            for j in range(n + 1):
                if last[j] != cofactor_exact(rows, n, j):
                    return f"{submodule} n={n}: last row entry {j}"
                if first[j] != cofactor_exact(rows, 0, j):
                    return f"{submodule} n={n}: first row entry {j}"
                if last[j] != closed_cofactor_last_row(submodule, n, j):
                    return f"{submodule} n={n}: closed last-row entry {j}"
            if first[n] != closed_cofactor_first_row_corner(submodule, n):
                return f"{submodule} n={n}: closed corner A_(0,n)"
    return None


@register("linalg", "cofactor expansion")
def check_cofactor_expansion(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        p = submodule.symbol
        for n in range(ranges.oracle_n + 1):
            gram = gram_matrix(p, n)
            det = det_sequence(p, n + 1)[n + 1]
            for row in (first_row_cofactors(p, n), last_row_cofactors(p, n)):
                if (bad := expansion_mismatch(gram, row.values, row.row, det)) is not None:
                    return f"{submodule} n={n}: {row.row_index.value} row fails on row {bad}"
    return None


@register("linalg", "F_n recurrence")
def check_f_sequence(ranges: Ranges) -> str | None:
    values = f_sequence(ranges.f_n)
    if values[:3] != [-4, -20, -60][: len(values)]:
        return f"initial values {values[:3]}"
    p = Submodule.ZW2.symbol
    for n in range(1, ranges.f_n + 1):
        closed = Fraction(-n * (n + 1) * (n + 2) * (n + 3), 6)
        if values[n - 1] != closed:
            return f"n={n}: F_n={values[n - 1]}, closed {closed}"
        if n >= 2 and -last_row_cofactors(p, n)[n - 1] != closed:
            return f"n={n}: -A_(n,n-1) differs from F_n"
    return None


@register("linalg", "gram consistency")
def check_gram_consistency(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        p = submodule.symbol
        base = BivariatePoly.from_symbol(p)
        for n in range(ranges.gram_n + 1):
            gram = gram_matrix(p, n)
            for i in range(n + 1):
                for j in range(n + 1):
                    oracle = h2_inner(base.shift(j, n - j), base.shift(i, n - i))
                    if gram.entry(i, j) != oracle:
                        return f"{submodule} n={n} entry ({i}, {j})"
    return None


@register("linalg", "defect-space orthogonality")
def check_defect_spaces(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        p = submodule.symbol
        base = BivariatePoly.from_symbol(p)
        for n in range(ranges.defect_n + 1):
            phi, psi = defect_basis_unnormalized(
                p, n, first_row_cofactors(p, n).values, last_row_cofactors(p, n).values
            )
            norm = det_sequence(p, n + 1)[n] * det_sequence(p, n + 1)[n + 1]
            if h2_inner(phi, phi) != norm or h2_inner(psi, psi) != norm:
                return f"{submodule} n={n}: squared norm differs from D_n D_(n+1)"
            for a in range(n):
                b = n - 1 - a
                if h2_inner(phi, base.shift(a + 1, b)) != 0:
                    return f"{submodule} n={n}: phi_n not orthogonal to z p z^{a} w^{b}"
                if h2_inner(psi, base.shift(a, b + 1)) != 0:
                    return f"{submodule} n={n}: psi_n not orthogonal to w p z^{a} w^{b}"
    return None
