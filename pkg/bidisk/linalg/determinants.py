from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from threading import Lock

from ..exceptions import DomainError, SingularGramError
from ..symbols import HomogeneousSymbol, Submodule, gram_matrix

__all__ = [
    "BandedFactor",
    "DetSequence",
    "banded_factor",
    "closed_Dn",
    "closed_cofactor_first_row_corner",
    "closed_cofactor_last_row",
    "det_sequence",
    "f_sequence",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DetSequence:
    """D_0, ..., D_N of a symbol, with D_0 = 1 and D_n = det A^(n-1)."""

    symbol: HomogeneousSymbol
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def N(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True, slots=True)
class BandedFactor:
    """Unpivoted LU data of A^(N-1) kept within the band of width deg p.

    ``minors`` holds D_0..D_N. ``bordered[i]`` maps column j >= i to
    D_i U_(i,j), the minor on rows 0..i and columns 0..i-1, j. It is
    stored as an int when integral, and its diagonal entry is D_(i+1).
    The leading blocks of A^(N-1) are A^0, A^1, ..., so the first n + 1
    rows of U, cut at column n, are the U factor of A^n.
    """

    minors: tuple[Fraction, ...]
    bordered: tuple[dict[int, int | Fraction], ...]

    @property
    def N(self) -> int:
        return len(self.minors) - 1


def _integral(value: Fraction) -> int | Fraction:
    return value.numerator if value.denominator == 1 else value


def _banded_factor(p: HomogeneousSymbol, size: int) -> BandedFactor:
    gram = gram_matrix(p, size - 1)
    band = p.degree
    rows = [
        {j: gram.entry(i, j) for j in range(max(0, i - band), min(size, i + band + 1))}
        for i in range(size)
    ]
    minors = [Fraction(1)]
    for k in range(size):
        pivot = rows[k].get(k, Fraction(0))
        if pivot == 0:
            raise SingularGramError(
                f"D_{k + 1} vanishes for symbol {p}. The symbol is not admissible."
            )
        minors.append(minors[-1] * pivot)
        for i in range(k + 1, min(size, k + band + 1)):
            if not (factor := rows[i].get(k, Fraction(0)) / pivot):
                continue
            for j, value in rows[k].items():
                if j >= k:
                    rows[i][j] = rows[i].get(j, Fraction(0)) - factor * value
    bordered = tuple(
        {j: _integral(v * minors[i]) for j, v in row.items() if j >= i}
        for i, row in enumerate(rows)
    )
    return BandedFactor(tuple(minors), bordered)


_cache: dict[HomogeneousSymbol, BandedFactor] = {}
_cache_lock = Lock()


def banded_factor(p: HomogeneousSymbol, N: int) -> BandedFactor:
    """The cached factor of ``p`` covering at least D_0..D_N.

    The cache grows by doubling.
    """
    if N < 0:
        raise DomainError(f"N must be non-negative. Got {N}.")
    with _cache_lock:
        cached = _cache.get(p)
        if cached is None or cached.N < N:
            current = cached.N if cached is not None else 0
            cached = _banded_factor(p, max(N, 2 * current, 8))
            _cache[p] = cached
            logger.debug("Factored the Gram matrix of %s up to D_%s.", p, cached.N)
    return cached


def det_sequence(p: HomogeneousSymbol, N: int) -> DetSequence:
    """Leading minors D_0..D_N of the Gram matrices of ``p``.

    The product of the first n pivots of one banded elimination is D_n.
    A zero pivot means the symbol is not admissible.
    """
    return DetSequence(p, banded_factor(p, N).minors[: N + 1])


def closed_Dn(submodule: Submodule | str, n: int) -> Fraction:
    submodule = Submodule.coerce(submodule)
    if n < 0:
        raise DomainError(f"n must be non-negative. Got {n}.")
    if submodule is Submodule.ZW:
        return Fraction(n + 1)
    return Fraction((n + 1) * (n + 2) ** 2 * (n + 3), 12)


def closed_cofactor_last_row(submodule: Submodule | str, n: int, k: int) -> Fraction:
    """A^n_(n,k) for 0 <= k <= n."""
    submodule = Submodule.coerce(submodule)
    if not 0 <= k <= n:
        raise DomainError(f"Column k must satisfy 0 <= k <= n. Got n={n}, k={k}.")
    if submodule is Submodule.ZW:
        return Fraction(k + 1)
    return Fraction(-(n + 2) * (n + 3) * (k + 1) * (k + 2) * (k - n - 1), 12)


def closed_cofactor_first_row_corner(submodule: Submodule | str, n: int) -> Fraction:
    """A^n_(0,n)."""
    submodule = Submodule.coerce(submodule)
    if n < 0:
        raise DomainError(f"n must be non-negative. Got {n}.")
    if submodule is Submodule.ZW:
        return Fraction(1)
    return Fraction((n + 1) * (n + 2) * (n + 3), 6)


def f_sequence(N: int) -> list[Fraction]:
    """F_1..F_N for (z-w)^2 from F_n = -4(D_(n-1) - D_(n-2)) + F_(n-2).

    F_n is minus the cofactor A^n_(n,n-1).
    """
    if N < 1:
        raise DomainError(f"N must be at least 1. Got {N}.")
    values = [Fraction(-4), Fraction(-20)][:N]
    for n in range(3, N + 1):
        d1 = closed_Dn(Submodule.ZW2, n - 1)
        d2 = closed_Dn(Submodule.ZW2, n - 2)
        values.append(-4 * (d1 - d2) + values[n - 3])
    return values
