from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from threading import Lock

from ..exceptions import DomainError

__all__ = ["HarmonicCache", "bernoulli_even", "harmonic", "harmonic2"]


class HarmonicCache:
    """Prefix tables of first- and second-order harmonic numbers.

    H[n] = 1 + 1/2 + ... + 1/n and H2[n] = 1 + 1/4 + ... + 1/n^2, with
    H[0] = H2[0] = 0. The tables only ever grow; entries are written
    once under a lock and are read-only afterwards, so one instance can
    be shared between threads.
    """

    def __init__(self):
        self.H: list[Fraction] = [Fraction(0)]
        self.H2: list[Fraction] = [Fraction(0)]
        self._lock = Lock()

    @property
    def max_n(self) -> int:
        return len(self.H) - 1

    def extend_to(self, n: int) -> None:
        if n <= self.max_n:
            return
        with self._lock:
            h, h2 = self.H[-1], self.H2[-1]
            for r in range(len(self.H), n + 1):
                h += Fraction(1, r)
                h2 += Fraction(1, r * r)
                self.H.append(h)
                self.H2.append(h2)

    def harmonic(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"Harmonic numbers need n >= 0. Got n={n}.")
        self.extend_to(n)
        return self.H[n]

    def harmonic2(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"Harmonic numbers need n >= 0. Got n={n}.")
        self.extend_to(n)
        return self.H2[n]


default_cache = HarmonicCache()


def harmonic(n: int) -> Fraction:
    """Returns H_n exactly."""
    return default_cache.harmonic(n)


def harmonic2(n: int) -> Fraction:
    """Returns the second-order harmonic number H_n^(2) exactly."""
    return default_cache.harmonic2(n)


@lru_cache(maxsize=None)
def _bernoulli_table(size: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1 (B_1 = -1/2)
    table = [Fraction(1)]
    for m in range(1, size + 1):
        acc = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli_even(m: int) -> Fraction:
    """Returns B_{2m} (B_2 = 1/6, B_4 = -1/30, ...)."""
    if m < 1:
        raise DomainError(f"bernoulli_even needs m >= 1. Got m={m}.")
    return _bernoulli_table(2 * m)[2 * m]
