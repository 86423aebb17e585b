from __future__ import annotations

from ..linalg import FHParams, fh_determinant, fh_determinant_exact, fh_exponent_estimate
from .registry import Ranges, register

EXPONENT_TOLERANCE = 0.1


@register("fh", "fisher-hartwig determinants")
def check_fh_determinants(ranges: Ranges) -> str | None:
    for alpha in range(ranges.fh_alpha + 1):
        for beta in range(-alpha, alpha + 1):
            params = FHParams(alpha, beta)
            for n in range(1, ranges.fh_n + 1):
                if fh_determinant(params, n) != fh_determinant_exact(params, n):
                    return f"alpha={alpha} beta={beta} n={n}"
    return None


@register("fh", "vanishing case")
def check_fh_vanishing(ranges: Ranges) -> str | None:
    params = FHParams(1, 2)
    for n in range(1, ranges.fh_vanish_n + 1):
        if fh_determinant(params, n) != 0 or fh_determinant_exact(params, n) != 0:
            return f"alpha=1 beta=2 n={n}"
    return None


@register("fh", "growth exponent")
def check_fh_exponent(ranges: Ranges) -> str | None:
    lo, hi = ranges.fh_fit
    for alpha, beta in ((2, 0), (2, 1), (0, 0)):
        params = FHParams(alpha, beta)
        estimate = fh_exponent_estimate(params, lo, hi)
        if abs(estimate - params.sigma) > EXPONENT_TOLERANCE:
            return f"alpha={alpha} beta={beta}: estimate {estimate:.4f}, sigma {params.sigma}"
    return None
