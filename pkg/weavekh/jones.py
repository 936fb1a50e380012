"""Jones polynomial of the weaving knots W(3, n)."""

import logging
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Dict, Optional

from weavekh.diagram import BraidWord
from weavekh.exceptions import InvalidArgumentError, TooManyCrossingsError
from weavekh.hecke import HeckeCoeffs, HeckeElementH3, coeffs
from weavekh.laurent import BiLaurentPoly, LaurentPoly, shift
from weavekh.utils import count_loops

logger = logging.getLogger(__name__)

MAXIMUM_ORACLE_CROSSINGS = 24

_TRACE_VARIABLES = ("q", "z")
# Tr(1) = 1, Tr(T1) = Tr(T2) = z, Tr(T1T2) = Tr(T2T1) = z^2,
# Tr(T1T2T1) = (q-1)z^2 + qz.
_BASIS_TRACES = (
    BiLaurentPoly({(0, 0): 1}, _TRACE_VARIABLES),
    BiLaurentPoly({(0, 1): 1}, _TRACE_VARIABLES),
    BiLaurentPoly({(0, 1): 1}, _TRACE_VARIABLES),
    BiLaurentPoly({(0, 2): 1}, _TRACE_VARIABLES),
    BiLaurentPoly({(0, 2): 1}, _TRACE_VARIABLES),
    BiLaurentPoly({(1, 2): 1, (0, 2): -1, (1, 1): 1}, _TRACE_VARIABLES),
)


@dataclass(frozen=True)
class JonesResult:
    """Jones polynomial of W(3, n) with its degree data."""

    n: int
    v: LaurentPoly
    min_deg: int
    max_deg: int
    span: int
    is_knot: bool
    is_palindromic: bool

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "jones": self.v.to_json(),
            "span": self.span,
            "min_deg": self.min_deg,
            "max_deg": self.max_deg,
            "is_knot": self.is_knot,
            "is_palindromic": self.is_palindromic,
        }


def trace_h3(e: HeckeElementH3) -> BiLaurentPoly:
    """Return the trace of an H_3 element as a polynomial in q and z.

    >>> from weavekh.hecke import HeckeElementH3
    >>> print(trace_h3(HeckeElementH3.generator(1)))
    z
    """
    total = BiLaurentPoly({}, _TRACE_VARIABLES)
    for coefficient, trace in zip(e.coefficients, _BASIS_TRACES):
        if coefficient:
            lifted = BiLaurentPoly(
                {(exponent, 0): c for exponent, c in coefficient.terms.items()},
                _TRACE_VARIABLES,
            )
            total = total + lifted * trace
    return total


def trace_numerator(row: HeckeCoeffs) -> LaurentPoly:
    """Return (1+t)^2 times the trace of the row at q=t, z=t^2/(1+t).

    Every term q^a z^k of the trace becomes t^(a+2k) (1+t)^(2-k); the result
    equals t^(n+1) V(t) whenever the closed form is right.
    """
    t = LaurentPoly.monomial(1, var="t")
    one_plus_t = 1 + t
    factors = {0: one_plus_t * one_plus_t, 1: one_plus_t, 2: LaurentPoly.constant(1, "t")}
    total = LaurentPoly.zero("t")
    for (a, k), c in trace_h3(row.to_element()).items():
        total = total + shift(factors[k], a + 2 * k) * c
    return total


def jones_from_coeffs(row: HeckeCoeffs) -> JonesResult:
    """Assemble V_W(3,n)(t) from a coefficient row.

    The polynomial is t^(-n-1) ((1+t)^2 C0 + (1+t)(C1+C2) t^2 + (C12+C21) t^4)
    with q renamed to t.
    """
    n = row.n
    c0, c1, c2, c12, c21, _ = (value.rename("t") for value in row.as_tuple())
    one_plus_t = 1 + LaurentPoly.monomial(1, var="t")
    numerator = (
        one_plus_t * one_plus_t * c0
        + shift(one_plus_t * (c1 + c2), 2)
        + shift(c12 + c21, 4)
    )
    v = shift(numerator, -n - 1)
    is_knot = gcd(3, n) == 1
    if not is_knot:
        logger.warning("3 | n: closure of W(3,%d) is a 3-component link", n)
    palindromic = v.is_palindromic()
    if not palindromic:
        logger.warning("Jones polynomial of W(3,%d) is not palindromic", n)
    return JonesResult(
        n=n,
        v=v,
        min_deg=v.min_degree,
        max_deg=v.max_degree,
        span=v.span,
        is_knot=is_knot,
        is_palindromic=palindromic,
    )


def jones_w3(n: int, row: Optional[HeckeCoeffs] = None) -> JonesResult:
    """Return the Jones polynomial of the weaving knot W(3, n).

    Parameters
    ----------
    n: int
        Number of braid periods, positive. When 3 divides n the closure is a
        link; the polynomial is still returned and a warning is logged.
    row: Optional[HeckeCoeffs] = None
        Precomputed coefficient row n, to avoid running the recursion again.

    Raises
    ------
    InvalidArgumentError
        If n is not positive or the row belongs to another n.

    >>> print(jones_w3(2).v)
    t^-2 - t^-1 + 1 - t + t^2
    """
    if n < 1:
        raise InvalidArgumentError(f"The braid power must be positive, got {n}.")
    if row is None:
        row = coeffs(n)
    elif row.n != n:
        raise InvalidArgumentError(f"Expected the coefficient row {n}, got row {row.n}.")
    return jones_from_coeffs(row)


def kauffman_oracle(b: BraidWord) -> LaurentPoly:
    """Return the Jones polynomial of a braid closure by the bracket state sum.

    Every one of the 2^c states is smoothed and its loops counted; the
    bracket is normalized by (-A^3)^-w with w the writhe and converted with
    A = t^(-1/4).

    Parameters
    ----------
    b: BraidWord
        The braid whose closure is evaluated.

    Raises
    ------
    TooManyCrossingsError
        If the word has more than 24 letters.
    InvalidArgumentError
        If an exponent of A is not a multiple of 4, which happens for
        closures with an even number of components.
    """
    crossings = len(b.letters)
    if crossings > MAXIMUM_ORACLE_CROSSINGS:
        raise TooManyCrossingsError(
            f"The state sum over {crossings} crossings enumerates 2^{crossings} states; "
            f"at most {MAXIMUM_ORACLE_CROSSINGS} crossings are supported."
        )
    # The A-smoothing of a positive letter is the identity, that of a
    # negative letter is the cup-cap; the B-smoothing is the other one.
    smoothings = [
        ((None, index - 1) if sign == 1 else (index - 1, None))
        for index, sign in b.letters
    ]
    states: Counter = Counter()
    for mask in range(1 << crossings):
        slices = [pair[(mask >> k) & 1] for k, pair in enumerate(smoothings)]
        b_count = bin(mask).count("1")
        states[(crossings - 2 * b_count, count_loops(b.strands, slices))] += 1

    a = LaurentPoly.monomial(1, var="A")
    loop_value = -(a * a) - LaurentPoly.monomial(-2, var="A")
    bracket = LaurentPoly.zero("A")
    for (exponent, loops), count in states.items():
        bracket = bracket + shift(loop_value ** (loops - 1), exponent) * count
    writhe = sum(sign for _, sign in b.letters)
    normalized = shift(bracket, -3 * writhe) * (-1 if writhe % 2 else 1)

    terms = {}
    for exponent, coefficient in normalized.terms.items():
        if exponent % 4:
            raise InvalidArgumentError(
                f"The bracket has the exponent A^{exponent}, not a power of t."
            )
        terms[-exponent // 4] = coefficient
    return LaurentPoly(terms, var="t")
