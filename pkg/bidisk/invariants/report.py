from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith import PiQuadratic
from ..asymptotics.expansions import asymptote_terms
from ..asymptotics.residual import residual_times_k3
from ..exceptions import DomainError
from ..symbols import HomogeneousSymbol, Submodule
from .sigma import has_tail_bound, sigma_closed, sigma_partial, sigma_tail_bound

__all__ = ["InvariantReport", "invariant_report", "invariant_table"]


@dataclass(frozen=True, slots=True)
class InvariantReport:
    """One row of a Sigma_k table.

    Closed form, asymptote and residual are only known for the named
    submodules and are None for other symbols. The tail bound is None
    for symbols without a certified one.
    """

    k: int
    partial: Fraction
    float_value: float
    closed: PiQuadratic | None = None
    tail_bound: Fraction | None = None
    asymptote: float | None = None
    residual_k3: float | None = None

    @property
    def within_tail(self) -> bool:
        if self.closed is None or self.tail_bound is None:
            return True
        gap = self.closed.enclosure().affine(1, -self.partial)
        return gap.lo >= -self.tail_bound and gap.hi <= self.tail_bound


def invariant_report(target, k: int, truncation: int) -> InvariantReport:
    if k < 0 or truncation < 0:
        raise DomainError(f"k and truncation must be non-negative. Got {k}, {truncation}.")
    partial = sigma_partial(target, k, truncation)
    if isinstance(target, HomogeneousSymbol):
        tail_bound = None
        if has_tail_bound(target):
            tail_bound = sigma_tail_bound(target, k, truncation)
        return InvariantReport(k, partial, float(partial), tail_bound=tail_bound)
    submodule = Submodule.coerce(target)
    closed = sigma_closed(submodule, k)
    asymptote = residual = None
    if k >= 1:
        asymptote = float(asymptote_terms(submodule, k))
        residual = float(residual_times_k3(submodule, k))
    return InvariantReport(
        k,
        partial,
        float(closed),
        closed=closed,
        tail_bound=sigma_tail_bound(submodule, k, truncation),
        asymptote=asymptote,
        residual_k3=residual,
    )


def invariant_table(target, k_max: int, truncation: int) -> list[InvariantReport]:
    return [invariant_report(target, k, truncation) for k in range(k_max + 1)]
