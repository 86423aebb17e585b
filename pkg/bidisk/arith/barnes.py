from __future__ import annotations

from threading import Lock

from ..exceptions import DomainError

__all__ = ["barnes_g_int"]

# _values[n] = G(n); index 0 unused
_values: list[int] = [0, 1, 1]
_lock = Lock()


def barnes_g_int(n: int) -> int:
    """Returns the Barnes G-function at a positive integer.

    G(1) = G(2) = 1 and G(n) = 0! 1! ... (n-2)! for n >= 2, i.e. the
    integer solution of G(z+1) = Gamma(z) G(z).
    """
    if n < 1:
        raise DomainError(f"barnes_g_int is only defined for n >= 1. Got n={n}.")
    if n >= len(_values):
        with _lock:
            g = _values[-1]
            fact = 1
            for j in range(1, len(_values) - 1):
                fact *= j
            # fact = (len(_values) - 2)!
            for m in range(len(_values), n + 1):
                g *= fact
                _values.append(g)
                fact *= m - 1
    return _values[n]
