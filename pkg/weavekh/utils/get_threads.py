"""Resolve the number of worker threads."""

import os
from typing import Optional

THREADS_VARIABLE = "WEAVEKH_THREADS"


def get_threads(requested: Optional[int] = None) -> int:
    """Return the number of threads to use.

    The ``WEAVEKH_THREADS`` environment variable, when set, overrides the
    requested value. Zero means one thread per available CPU.

    Parameters
    ----------
    requested: Optional[int] = None,
        Number of threads asked for by the caller, None meaning 1.

    Raises
    ------
    ValueError,
        If the environment variable is not a nonnegative integer, or the
        requested value is negative.
    """
    raw = os.environ.get(THREADS_VARIABLE)
    if raw is not None and raw.strip():
        try:
            requested = int(raw)
        except ValueError:
            raise ValueError(
                f"{THREADS_VARIABLE} must be a nonnegative integer, got {raw!r}."
            ) from None
    if requested is None:
        return 1
    if requested < 0:
        raise ValueError(f"The number of threads must be nonnegative, got {requested}.")
    if requested == 0:
        return os.cpu_count() or 1
    return requested
