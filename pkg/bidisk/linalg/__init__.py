from .cofactors import (
    CofactorRow,
    RowIndex,
    expansion_mismatch,
    first_row_cofactors,
    last_row_cofactors,
)
from .determinants import (
    DetSequence,
    closed_cofactor_first_row_corner,
    closed_cofactor_last_row,
    closed_Dn,
    det_sequence,
    f_sequence,
)
from .exact import cofactor_exact, det_exact, minor_rows
from .fisher_hartwig import (
    FHParams,
    SymbolCoeffs,
    fh_determinant,
    fh_determinant_exact,
    fh_exponent_estimate,
    fh_symbol_coeffs,
    fh_toeplitz_rows,
)

__all__ = [
    "CofactorRow",
    "DetSequence",
    "FHParams",
    "RowIndex",
    "SymbolCoeffs",
    "closed_Dn",
    "closed_cofactor_first_row_corner",
    "closed_cofactor_last_row",
    "cofactor_exact",
    "det_exact",
    "det_sequence",
    "expansion_mismatch",
    "f_sequence",
    "fh_determinant",
    "fh_determinant_exact",
    "fh_exponent_estimate",
    "fh_symbol_coeffs",
    "fh_toeplitz_rows",
    "first_row_cofactors",
    "last_row_cofactors",
    "minor_rows",
]
