from contextlib import contextmanager
from threading import local

from bidisk.exceptions import BidiskError
from bidisk.utils import get_pi2_digits


class Pi2Digits(local):
    """
    Thread-local number of decimal digits used for default pi^2
    enclosures, which acts like an integer.

    Unset, it resolves to settings.BIDISK_PI2_DIGITS (or the
    BIDISK_PI2_DIGITS environment variable). A thread can raise its
    own precision temporarily without touching other threads.
    """

    def __init__(self, default: int | None = None, *args, **kwargs):
        if default is not None and (not isinstance(default, int) or default < 1):
            raise BidiskError(
                "Invalid default value for pi^2 digits. Expected a positive int. "
                f"Got `{default}`."
            )
        self.default = default
        self.reset()

    def __repr__(self):
        return repr(self.__int__())

    def __str__(self):
        return str(self.__int__())

    def __int__(self):
        if self.digits is None:
            return self.get_default()
        return self.digits

    def __index__(self):
        return self.__int__()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.__int__() == other
        elif isinstance(other, Pi2Digits):
            return self.__int__() == other.__int__()
        return False

    def __hash__(self):
        return self.__int__()

    @contextmanager
    def override(self, value: int):
        """
        Overrides the digits temporarily::

           >>> with PI2_DIGITS.override(80):
           ...    int(PI2_DIGITS)
           80
        """
        digits_original = self.digits
        self.set(value)
        try:
            yield self
        finally:
            self.digits = digits_original

    def set(self, value: int):
        if not isinstance(value, int) or value < 1:
            raise BidiskError(f"Invalid pi^2 digits. Expected a positive int. Got `{value}`.")
        self.digits = value

    def reset(self):
        self.digits = None

    def get_default(self) -> int:
        if self.default is None:
            return get_pi2_digits()
        return self.default


PI2_DIGITS = Pi2Digits()
