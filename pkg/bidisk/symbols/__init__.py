from .gram import (
    AutocorrelationSeq,
    ToeplitzGram,
    autocorrelation,
    autocorrelation_seq,
    defect_basis_unnormalized,
    gram_matrix,
)
from .homogeneous import HomogeneousSymbol, Submodule, parse_symbol
from .polynomial import BivariatePoly, h2_inner

__all__ = [
    "AutocorrelationSeq",
    "BivariatePoly",
    "HomogeneousSymbol",
    "Submodule",
    "ToeplitzGram",
    "autocorrelation",
    "autocorrelation_seq",
    "defect_basis_unnormalized",
    "gram_matrix",
    "h2_inner",
    "parse_symbol",
]
