from .enclosures import SkEnclosure, em_partial, sk_enclosure
from .expansions import ASYMPTOTE_COEFFS, asymptote_terms
from .monotonicity import (
    ANALYTIC_BOUND_FROM,
    MonotonicityCertificate,
    R_rational,
    T_poly,
    analytic_bound_identity,
    analytic_lower_bound,
    analytic_lower_bound_check,
    delta_k,
    monotonicity_certificate,
)
from .residual import ResidualRow, asymptote_residual, residual_bounded, residual_times_k3

__all__ = [
    "ANALYTIC_BOUND_FROM",
    "ASYMPTOTE_COEFFS",
    "MonotonicityCertificate",
    "R_rational",
    "ResidualRow",
    "SkEnclosure",
    "T_poly",
    "analytic_bound_identity",
    "analytic_lower_bound",
    "analytic_lower_bound_check",
    "asymptote_residual",
    "asymptote_terms",
    "delta_k",
    "em_partial",
    "monotonicity_certificate",
    "residual_bounded",
    "residual_times_k3",
    "sk_enclosure",
]
