from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from ..arith import PiQuadratic, pi2_enclosure_digits
from ..invariants import (
    core_eigenvalues,
    hs_identities,
    pairing_cases_zw2,
    pairing_generic,
    pf_coefficients_zw2,
    second_largest_eigenvalue,
    sigma_closed,
    sigma_partial,
    sigma_tail_bound,
    sigma_term_closed,
    squared_pf_sum,
)
from ..precision import PI2_DIGITS
from ..symbols import Submodule
from .registry import Ranges, register

CLOSED_VALUES = {
    Submodule.ZW2: (
        (Fraction(2, 3), Fraction(-4)),
        (Fraction(2, 3), Fraction(-5)),
        (Fraction(178, 3), Fraction(-585)),
        (Fraction(2906, 3), Fraction(-9560)),
    ),
    Submodule.ZW: (
        (Fraction(1, 6), Fraction(0)),
        (Fraction(1, 6), Fraction(-1)),
        (Fraction(5, 6), Fraction(-8)),
        (Fraction(13, 6), Fraction(-85, 4)),
    ),
}

TAIL_CEILING = Fraction(1, 100)


@register("invariants", "closed values")
def check_closed_values(ranges: Ranges) -> str | None:
    for submodule, values in CLOSED_VALUES.items():
        for k, expected in enumerate(values):
            if sigma_closed(submodule, k) != PiQuadratic(*expected):
                return f"{submodule} k={k}: {sigma_closed(submodule, k)}"
    return None


@register("invariants", "series equals closed form")
def check_series(ranges: Ranges) -> str | None:
    for k in range(3, ranges.series_k + 1):
        if 4 * squared_pf_sum(pf_coefficients_zw2(k)) != sigma_closed(Submodule.ZW2, k):
            return f"zw2 k={k}"
    return None


@register("invariants", "partial sums within tail")
def check_enclosure(ranges: Ranges) -> str | None:
    for submodule in Submodule:
        for k in range(ranges.enclosure_k + 1):
            closed = sigma_closed(submodule, k).enclosure()
            for N in ranges.truncations:
                partial = sigma_partial(submodule, k, N)
                tail = sigma_tail_bound(submodule, k, N)
                if closed.hi < partial or closed.lo > partial + tail:
                    return f"{submodule} k={k} N={N}"
                if N >= 1000 and tail > TAIL_CEILING:
                    return f"{submodule} k={k} N={N}: tail bound {float(tail):.3g}"
    return None


@register("invariants", "pairing oracle equivalence")
def check_pairings(ranges: Ranges) -> str | None:
    zw2, zw = Submodule.ZW2.symbol, Submodule.ZW.symbol
    for n in range(ranges.pairing_n + 1):
        for k in range(ranges.pairing_n + 1):
            generic = pairing_generic(zw2, n, k)
            cases = pairing_cases_zw2(n, k)
            if abs(generic) != abs(cases) or (n >= k - 1 and generic != cases):
                return f"zw2 n={n} k={k}: generic {generic}, case table {cases}"
            if k >= n + 3 and generic != 0:
                return f"zw2 n={n} k={k}: expected vanishing pairing"
            term_defined = k >= 1 and n >= k - 2
            if term_defined and abs(sigma_term_closed(Submodule.ZW2, k, n)) != abs(generic):
                return f"zw2 n={n} k={k}: closed term"
            generic = pairing_generic(zw, n, k)
            if k >= n + 2 and generic != 0:
                return f"zw n={n} k={k}: expected vanishing pairing"
            term_defined = k >= 1 and n >= k - 1
            if term_defined and abs(sigma_term_closed(Submodule.ZW, k, n)) != abs(generic):
                return f"zw n={n} k={k}: closed term"
    return None


@register("invariants", "core eigenvalues")
def check_core_eigenvalues(ranges: Ranges) -> str | None:
    expected = {
        Submodule.ZW2: lambda n: Fraction(4, (n + 2) ** 2),
        Submodule.ZW: lambda n: Fraction(1, (n + 1) ** 2),
    }
    for submodule, closed in expected.items():
        for row in core_eigenvalues(submodule, ranges.eigen_n):
            if row.lambda_sq != closed(row.n):
                return f"{submodule} n={row.n}: lambda^2={row.lambda_sq}"
        for row in core_eigenvalues(submodule.symbol, min(ranges.eigen_n, 20)):
            if row.lambda_sq != closed(row.n):
                return f"{submodule} n={row.n}: cofactor route lambda^2={row.lambda_sq}"
    if second_largest_eigenvalue(Submodule.ZW2) != Fraction(2, 3):
        return "zw2 second largest eigenvalue"
    if second_largest_eigenvalue(Submodule.ZW) != Fraction(1, 2):
        return "zw second largest eigenvalue"
    return None


@register("invariants", "hilbert-schmidt identities")
def check_hs_identities(ranges: Ranges) -> str | None:
    expected = {
        Submodule.ZW2: PiQuadratic(Fraction(4, 3), -9),
        Submodule.ZW: PiQuadratic(Fraction(1, 3), -1),
    }
    for submodule, hs_norm in expected.items():
        if hs_identities(submodule)[2] != hs_norm:
            return f"{submodule}: ||C||^2 = {hs_identities(submodule)[2]}"
    return None


@register("invariants", "pi^2 reference")
def check_pi2_reference(ranges: Ranges) -> str | None:
    digits = int(PI2_DIGITS)
    enclosure = pi2_enclosure_digits(digits)
    with mp.workdps(digits + 20):
        reference = mp.pi**2
        lo = mp.mpf(enclosure.lo.numerator) / enclosure.lo.denominator
        hi = mp.mpf(enclosure.hi.numerator) / enclosure.hi.denominator
        if not lo <= reference <= hi:
            return f"pi^2 outside [{enclosure.lo}, {enclosure.hi}] at {digits} digits"
    if enclosure.width > Fraction(1, 10**digits):
        return f"enclosure width {float(enclosure.width):.3g} exceeds 10^-{digits}"
    return None
