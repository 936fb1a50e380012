"""Errors raised by weavekh.

Every error is a ``ValueError`` carrying a stable ``code`` string, so callers
that only care about bad input can keep catching ``ValueError``.
"""


class WeaveKhError(ValueError):
    """Base class of all weavekh errors."""

    code: str = "WEAVEKH_ERROR"

    def __init__(self, message: str):
        super().__init__(f"[{self.code}] {message}")
        self.message = message


class InvalidArgumentError(WeaveKhError):
    """An argument is outside the documented domain."""

    code = "INVALID_ARGUMENT"


class VariableMismatchError(WeaveKhError):
    """Two polynomials in different variables were combined."""

    code = "VARIABLE_MISMATCH"


class NonExactDivisionError(WeaveKhError):
    """A polynomial division left a nonzero remainder."""

    code = "NON_EXACT_DIVISION"


class OddExponentError(WeaveKhError):
    """An odd power of Q reached the knight-move substitution."""

    code = "ODD_EXPONENT"


class ZeroWithNegativeExponentError(WeaveKhError):
    """A Laurent polynomial with negative exponents was evaluated at zero."""

    code = "ZERO_WITH_NEGATIVE_EXPONENT"


class NegativeRankError(WeaveKhError):
    """A Khovanov rank came out negative."""

    code = "NEGATIVE_RANK"


class EmptyLineError(WeaveKhError):
    """A Betti line without any positive rank was normalized."""

    code = "EMPTY_LINE"


class DegenerateFitError(WeaveKhError):
    """The quadratic fit is singular or not concave down."""

    code = "DEGENERATE_FIT"


class TooManyCrossingsError(WeaveKhError):
    """The state sum would enumerate too many states."""

    code = "TOO_MANY_CROSSINGS"
