"""Natural logarithm of a ratio of arbitrarily large positive integers."""

import math


def log_ratio(numerator: int, denominator: int) -> float:
    """Return ln(numerator / denominator) without converting either to float.

    ``math.log`` accepts Python integers of any size, so ranks and totals
    well beyond the double range keep their full precision.

    Parameters
    ----------
    numerator: int,
        Positive integer.
    denominator: int,
        Positive integer.

    Raises
    ------
    ValueError,
        If either argument is not positive.

    >>> log_ratio(10**400, 10**400)
    0.0
    """
    if numerator <= 0 or denominator <= 0:
        raise ValueError(
            f"Both terms of the ratio must be positive, got {numerator} and {denominator}."
        )
    return math.log(numerator) - math.log(denominator)
