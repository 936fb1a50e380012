from decimal import Decimal

import humanize


def format_scientific(value: int, significant_digits: int = 6) -> str:
    """Return the integer in scientific notation with the given significant digits.

    Parameters
    ----------
    value: int,
        Integer to render, of any size.
    significant_digits: int = 6,
        Number of significant digits to keep.

    >>> format_scientific(151272000000000000000)
    '1.51272e+20'
    >>> format_scientific(7563)
    '7.56300e+3'
    """
    return format(Decimal(value), f".{significant_digits - 1}e")


def describe_integer(value: int, significant_digits: int = 6) -> str:
    """Return a human readable rendering of a possibly huge integer.

    Integers longer than 19 digits are followed by their value in
    scientific notation.

    >>> describe_integer(7563)
    '7,563'
    """
    if len(str(abs(value))) <= 19:
        return humanize.intcomma(value)
    try:
        approximate = humanize.scientific(float(value), precision=significant_digits - 1)
    except OverflowError:
        approximate = format_scientific(value, significant_digits)
    return f"{value} ({approximate})"


def abbreviate_integer(value: int, significant_digits: int = 6) -> str:
    """Return the integer as is up to 19 digits, in scientific notation beyond.

    >>> abbreviate_integer(970)
    '970'
    >>> abbreviate_integer(3 * 10**120)
    '3.00000e+120'
    """
    if len(str(abs(value))) <= 19:
        return str(value)
    return format_scientific(value, significant_digits)
