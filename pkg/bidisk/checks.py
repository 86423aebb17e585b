from django.core.checks import Error

from .utils import get_pi2_digits, get_residual_bound, get_sign_max_digits


def check_settings(app_configs=None, **kwargs):
    """Validates the BIDISK_* settings."""
    errors = []
    try:
        pi2_digits = get_pi2_digits()
        sign_max_digits = get_sign_max_digits()
        residual_bound = get_residual_bound()
    except (TypeError, ValueError) as e:
        return [
            Error(
                f"Invalid BIDISK setting. {e}",
                hint="BIDISK_PI2_DIGITS and BIDISK_SIGN_MAX_DIGITS must be integers.",
                id="bidisk.E001",
            )
        ]
    if pi2_digits < 1:
        errors.append(
            Error(
                f"BIDISK_PI2_DIGITS must be positive. Got {pi2_digits}.",
                id="bidisk.E002",
            )
        )
    if sign_max_digits < pi2_digits:
        errors.append(
            Error(
                "BIDISK_SIGN_MAX_DIGITS must be at least BIDISK_PI2_DIGITS. "
                f"Got {sign_max_digits} < {pi2_digits}.",
                id="bidisk.E003",
            )
        )
    if residual_bound <= 0:
        errors.append(
            Error(
                f"BIDISK_RESIDUAL_BOUND must be positive. Got {residual_bound}.",
                id="bidisk.E004",
            )
        )
    return errors
