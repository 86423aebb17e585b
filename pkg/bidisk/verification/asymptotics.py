from __future__ import annotations

from fractions import Fraction

from ..arith import PiQuadratic, Sign, harmonic2, qpi2_sign
from ..asymptotics import (
    R_rational,
    T_poly,
    analytic_lower_bound_check,
    asymptote_residual,
    delta_k,
    monotonicity_certificate,
    residual_bounded,
    sk_enclosure,
)
from ..exceptions import CertificateFailure
from ..symbols import Submodule
from .registry import Ranges, register

ZW_RESIDUAL_WINDOW = (0.05, 0.15)


@register("asymptotics", "enclosure soundness")
def check_sk_enclosures(ranges: Ranges) -> str | None:
    for k in range(1, ranges.sk_k + 1):
        exact = PiQuadratic(Fraction(1, 6), -harmonic2(k - 1)).enclosure()
        if not exact.issubset(sk_enclosure(k).interval):
            return f"k={k}"
    return None


@register("asymptotics", "delta two-route agreement")
def check_delta_routes(ranges: Ranges) -> str | None:
    # delta_k raises IdentityViolationError on disagreement
    for k in range(1, ranges.delta_k + 1):
        delta_k(Submodule.ZW2, k)
    return None


@register("asymptotics", "delta bracketing")
def check_delta_bracketing(ranges: Ranges) -> str | None:
    for k in range(1, ranges.delta_k + 1):
        delta = delta_k(Submodule.ZW2, k)
        enclosure = sk_enclosure(k)
        low = R_rational(k) - T_poly(k) * enclosure.upper
        high = R_rational(k) - T_poly(k) * enclosure.lower
        if qpi2_sign(delta - low) is Sign.NEGATIVE or qpi2_sign(high - delta) is Sign.NEGATIVE:
            return f"k={k}"
    return None


@register("asymptotics", "monotonicity certificate")
def check_monotonicity(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        try:
            certificate = monotonicity_certificate(submodule, ranges.k_max)
        except CertificateFailure as e:
            return f"{submodule} k={e.k}: {e}"
        if not certificate.valid:
            return f"{submodule}: invalid certificate"
    return None


@register("asymptotics", "analytic lower bound")
def check_analytic_bound(ranges: Ranges) -> str | None:
    for k in range(3, ranges.analytic_k + 1):
        if not analytic_lower_bound_check(k):
            return f"k={k}"
    return None


@register("asymptotics", "asymptote residual")
def check_residuals(ranges: Ranges) -> str | None:
    rows = asymptote_residual(Submodule.ZW2, *ranges.residual_zw2)
    if not residual_bounded(rows):
        worst = max(rows, key=lambda row: abs(row.residual_times_k3))
        return f"zw2 k={worst.k}: residual*k^3={worst.residual_times_k3:.4f}"
    lo, hi = ZW_RESIDUAL_WINDOW
    for row in asymptote_residual(Submodule.ZW, *ranges.residual_zw):
        if not lo <= row.residual_times_k3 <= hi:
            return f"zw k={row.k}: residual*k^3={row.residual_times_k3:.4f}"
    return None
