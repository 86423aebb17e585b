from .precision import PI2_DIGITS, Pi2Digits

__all__ = ["PI2_DIGITS", "Pi2Digits"]
