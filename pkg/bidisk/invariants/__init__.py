from .core import CoreSpectrum, EigenRow, core_eigenvalues, second_largest_eigenvalue
from .pairings import (
    PairingValue,
    pairing_cases_zw2,
    pairing_generic,
    pairing_value,
    sigma_term_closed,
)
from .report import InvariantReport, invariant_report, invariant_table
from .series import PartialFractionSpec, pf_coefficients_zw2, squared_pf_sum
from .sigma import (
    P_poly,
    Q_poly,
    has_tail_bound,
    hs_identities,
    s_tail,
    sigma_closed,
    sigma_partial,
    sigma_tail_bound,
)

__all__ = [
    "CoreSpectrum",
    "EigenRow",
    "InvariantReport",
    "P_poly",
    "PairingValue",
    "PartialFractionSpec",
    "Q_poly",
    "core_eigenvalues",
    "has_tail_bound",
    "hs_identities",
    "invariant_report",
    "invariant_table",
    "pairing_cases_zw2",
    "pairing_generic",
    "pairing_value",
    "pf_coefficients_zw2",
    "s_tail",
    "second_largest_eigenvalue",
    "sigma_closed",
    "sigma_partial",
    "sigma_tail_bound",
    "sigma_term_closed",
    "squared_pf_sum",
]
