from .utils import get_debug


class BidiskError(Exception):
    pass


class DomainError(BidiskError, ValueError):
    pass


class DimensionMismatchError(BidiskError):
    pass


class IndexOutOfRangeError(BidiskError, IndexError):
    pass


class SingularGramError(BidiskError):
    pass


class DuplicateShiftsError(BidiskError):
    pass


class OutOfScopeParamsError(BidiskError):
    pass


class ZeroDeterminantError(BidiskError):
    pass


class RefinementBudgetExceeded(BidiskError):
    pass


class IdentityViolationError(BidiskError):
    pass


class SymbolParseError(BidiskError, ValueError):
    pass


class CertificateFailure(BidiskError):
    def __init__(self, message: str, k: int | None = None):
        super().__init__(message)
        self.k = k


def debug_raise_ansatz_mismatch(symbol, n: int, row: int) -> None:
    if get_debug():
        raise IdentityViolationError(
            f"Polynomial ansatz failed the cofactor expansion on row {row}. "
            f"Got symbol {symbol} and n={n}. "
            "To fall back to the banded solve silently, set BIDISK_DEBUG=False."
        )

