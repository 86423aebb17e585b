"""Toeplitz determinants of the symbol (-z)^beta |1 - z|^(2 alpha).

At integer parameters the truncated determinants have an exact Barnes G
closed form, which vanishes when alpha + beta or alpha - beta is a
negative integer. ``fh_exponent_estimate`` is a float diagnostic for the
growth exponent alpha^2 - beta^2.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..arith import barnes_g_int
from ..exceptions import DomainError, OutOfScopeParamsError, ZeroDeterminantError
from .exact import det_exact

__all__ = [
    "FHParams",
    "SymbolCoeffs",
    "fh_determinant",
    "fh_determinant_exact",
    "fh_exponent_estimate",
    "fh_symbol_coeffs",
    "fh_toeplitz_rows",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FHParams:
    alpha: int
    beta: int

    def __post_init__(self):
        if not isinstance(self.alpha, int) or not isinstance(self.beta, int):
            raise OutOfScopeParamsError(
                f"Only integer parameters are supported. Got alpha={self.alpha!r}, "
                f"beta={self.beta!r}."
            )
        if self.alpha < 0:
            raise DomainError(f"alpha must be non-negative. Got {self.alpha}.")

    @property
    def sigma(self) -> int:
        """Growth exponent alpha^2 - beta^2."""
        return self.alpha**2 - self.beta**2

    @property
    def vanishes(self) -> bool:
        return self.alpha + self.beta < 0 or self.alpha - self.beta < 0


@dataclass(frozen=True, slots=True)
class SymbolCoeffs:
    """Fourier coefficients of a Laurent polynomial symbol, zero off ``coeffs``."""

    coeffs: dict[int, Fraction]

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs.get(m, Fraction(0))

    @property
    def support(self) -> tuple[int, int]:
        return min(self.coeffs), max(self.coeffs)


def fh_symbol_coeffs(params: FHParams) -> SymbolCoeffs:
    """Fourier coefficients of (-z)^beta |1 - z|^(2 alpha).

    The coefficient at m is (-1)^m C(2 alpha, alpha + m - beta). It is
    built by convolving (1 - z)^alpha with its reflection, then shifting
    by beta with sign (-1)^beta.
    """
    alpha, beta = params.alpha, params.beta
    half = [(-1) ** i * math.comb(alpha, i) for i in range(alpha + 1)]
    coeffs = {}
    for m in range(-alpha, alpha + 1):
        value = sum(half[i + m] * half[i] for i in range(alpha + 1) if 0 <= i + m <= alpha)
        coeffs[m + beta] = Fraction((-1) ** beta * value)
    return SymbolCoeffs(coeffs)


def fh_toeplitz_rows(params: FHParams, n: int) -> list[list[Fraction]]:
    """The n x n truncation (phi_(j-i)), zero outside the support band."""
    coeffs = fh_symbol_coeffs(params)
    lo, hi = coeffs.support
    zero = Fraction(0)
    return [
        [coeffs[j - i] if lo <= j - i <= hi else zero for j in range(n)] for i in range(n)
    ]


def fh_determinant(params: FHParams, n: int) -> Fraction:
    """D_n of the symbol through the Barnes G closed form."""
    if n < 1:
        raise DomainError(f"n must be positive. Got {n}.")
    if params.vanishes:
        return Fraction(0)
    alpha, beta = params.alpha, params.beta
    g = barnes_g_int
    prefactor = Fraction(g(1 + alpha + beta) * g(1 + alpha - beta), g(1 + 2 * alpha))
    ratio = Fraction(
        g(1 + n) * g(1 + n + 2 * alpha), g(1 + n + alpha + beta) * g(1 + n + alpha - beta)
    )
    return prefactor * ratio


def fh_determinant_exact(params: FHParams, n: int) -> Fraction:
    """D_n by elimination on the truncated Toeplitz matrix."""
    return det_exact(fh_toeplitz_rows(params, n))


def _log_abs(value: Fraction) -> float:
    # exact ratios outgrow double range quickly
    return math.log(abs(value.numerator)) - math.log(value.denominator)


def fh_exponent_estimate(params: FHParams, n_lo: int, n_hi: int) -> float:
    """Least-squares growth exponent of D_n over [n_lo, n_hi].

    Fits log D_n = c + sigma log n + c1 / n; the 1/n column absorbs the
    leading correction that biases a plain log-log slope on short ranges.
    """
    if not 2 <= n_lo < n_hi:
        raise DomainError(f"Expected 2 <= n_lo < n_hi. Got n_lo={n_lo}, n_hi={n_hi}.")
    ns = np.arange(n_lo, n_hi + 1, dtype=float)
    logs = []
    for n in range(n_lo, n_hi + 1):
        if (value := fh_determinant(params, n)) == 0:
            raise ZeroDeterminantError(
                f"D_{n} vanishes for alpha={params.alpha}, beta={params.beta}. "
                "The growth exponent is undefined."
            )
        logs.append(_log_abs(value))
    design = np.column_stack([np.ones_like(ns), np.log(ns), 1.0 / ns])
    solution, *_ = np.linalg.lstsq(design, np.array(logs), rcond=None)
    logger.debug("Exponent fit for %s: %s", params, solution)
    return float(solution[1])
