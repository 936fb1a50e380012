"""Coefficients of the braid (sigma_1 sigma_2^-1)^n in the Hecke algebra H_3.

The image of (sigma_1 sigma_2^-1)^n is q^-n times a combination of the
ordered basis 1, T1, T2, T1T2, T2T1, T1T2T1 with polynomial coefficients.
The coefficients are produced by a six-term recursion; an independent
multiplication of H_3 elements, derived from the defining relations only,
serves as an oracle for it.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Optional, Sequence, Tuple

from weavekh.exceptions import InvalidArgumentError
from weavekh.laurent import LaurentPoly

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

BASIS: Tuple[Word, ...] = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1))
BASIS_NAMES: Tuple[str, ...] = ("C0", "C1", "C2", "C12", "C21", "C121")

Q = LaurentPoly.monomial(1, var="q")
ONE = LaurentPoly.constant(1, var="q")
ZERO = LaurentPoly.zero(var="q")


@dataclass(frozen=True)
class HeckeCoeffs:
    """Row n of the recursion, the q^-n prefactor being implicit."""

    n: int
    c0: LaurentPoly
    c1: LaurentPoly
    c2: LaurentPoly
    c12: LaurentPoly
    c21: LaurentPoly
    c121: LaurentPoly

    def as_tuple(self) -> Tuple[LaurentPoly, ...]:
        return (self.c0, self.c1, self.c2, self.c12, self.c21, self.c121)

    def to_element(self) -> "HeckeElementH3":
        """Return the row as a general H_3 element, without the prefactor."""
        return HeckeElementH3(self.as_tuple())

    def to_json(self) -> Dict:
        payload: Dict = {"n": self.n}
        for name, value in zip(BASIS_NAMES, self.as_tuple()):
            payload[name] = value.to_json()
        return payload


@dataclass(frozen=True)
class HeckeElementH3:
    """Element of H_3 as six coefficients over the ordered basis."""

    coefficients: Tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(BASIS):
            raise InvalidArgumentError(
                f"An element of H_3 has {len(BASIS)} coefficients, "
                f"got {len(self.coefficients)}."
            )

    @classmethod
    def from_words(cls, terms: Dict[Word, LaurentPoly]) -> "HeckeElementH3":
        """Build from a map of basis words to coefficients."""
        for word in terms:
            if word not in BASIS:
                raise InvalidArgumentError(f"{word} is not a basis word of H_3.")
        return cls(tuple(terms.get(word, ZERO) for word in BASIS))

    @classmethod
    def zero(cls) -> "HeckeElementH3":
        return cls((ZERO,) * len(BASIS))

    @classmethod
    def one(cls) -> "HeckeElementH3":
        return cls.from_words({(): ONE})

    @classmethod
    def generator(cls, index: int) -> "HeckeElementH3":
        """Return T1 or T2."""
        if index not in (1, 2):
            raise InvalidArgumentError(
                f"H_3 has generators T1 and T2, got index {index}."
            )
        return cls.from_words({(index,): ONE})

    def coefficient(self, word: Word) -> LaurentPoly:
        return self.coefficients[BASIS.index(tuple(word))]

    def __add__(self, other: "HeckeElementH3") -> "HeckeElementH3":
        return HeckeElementH3(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def scale(self, factor: LaurentPoly) -> "HeckeElementH3":
        return HeckeElementH3(tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: "HeckeElementH3") -> "HeckeElementH3":
        return hecke_mul(self, other)

    def power(self, exponent: int) -> "HeckeElementH3":
        if exponent < 0:
            raise InvalidArgumentError(
                f"Only nonnegative powers are supported, got {exponent}."
            )
        result = HeckeElementH3.one()
        for _ in range(exponent):
            result = hecke_mul(result, self)
        return result


@lru_cache(maxsize=None)
def _reduce(word: Word) -> Tuple[Tuple[Word, LaurentPoly], ...]:
    """Rewrite a word in T1, T2 into the ordered basis.

    The rules are Ti Ti -> (q-1) Ti + q and T2 T1 T2 -> T1 T2 T1; each rule
    lowers either the length or the number of T2 letters, so rewriting stops.
    """
    if word in BASIS:
        return ((word, ONE),)
    terms: Dict[Word, LaurentPoly] = {}
    for position in range(len(word) - 1):
        if word[position] == word[position + 1]:
            head, tail = word[:position], word[position + 2 :]
            parts = (
                (head + (word[position],) + tail, Q - 1),
                (head + tail, Q),
            )
            break
    else:
        for position in range(len(word) - 2):
            if word[position : position + 3] == (2, 1, 2):
                parts = (
                    (word[:position] + (1, 2, 1) + word[position + 3 :], ONE),
                )
                break
        else:
            raise InvalidArgumentError(f"Cannot reduce the word {word}.")
    for reducible, factor in parts:
        for basis_word, coefficient in _reduce(reducible):
            terms[basis_word] = terms.get(basis_word, ZERO) + factor * coefficient
    return tuple((w, c) for w, c in terms.items() if c)


@lru_cache(maxsize=1)
def multiplication_table() -> Dict[Tuple[Word, Word], Tuple[Tuple[Word, LaurentPoly], ...]]:
    """Return the products of every pair of basis words, reduced to the basis."""
    return {(a, b): _reduce(a + b) for a in BASIS for b in BASIS}


def hecke_mul(a: HeckeElementH3, b: HeckeElementH3) -> HeckeElementH3:
    """Return the product of two H_3 elements.

    >>> t1 = HeckeElementH3.generator(1)
    >>> square = hecke_mul(t1, t1)
    >>> print(square.coefficient(()), "|", square.coefficient((1,)))
    q | -1 + q
    """
    table = multiplication_table()
    result: Dict[Word, LaurentPoly] = {}
    for left, x in zip(BASIS, a.coefficients):
        if not x:
            continue
        for right, y in zip(BASIS, b.coefficients):
            if not y:
                continue
            product = x * y
            for word, coefficient in table[(left, right)]:
                result[word] = result.get(word, ZERO) + product * coefficient
    return HeckeElementH3.from_words(result)


def hecke_element_of_word(letters: Sequence[Tuple[int, int]]) -> Tuple[HeckeElementH3, int]:
    """Return the image of a signed braid word on three strands.

    The inverse generator is Ti^-1 = q^-1 (Ti - (q-1)), so the image is
    returned as a pair (element, k) meaning q^-k times element, with k the
    number of negative letters.

    Parameters
    ----------
    letters: Sequence[Tuple[int, int]]
        Pairs (generator index in {1, 2}, sign in {1, -1}).
    """
    result = HeckeElementH3.one()
    negatives = 0
    for index, sign in letters:
        generator = HeckeElementH3.generator(index)
        if sign == -1:
            negatives += 1
            generator = generator + HeckeElementH3.one().scale(1 - Q)
        elif sign != 1:
            raise InvalidArgumentError(f"Letter signs are 1 or -1, got {sign}.")
        result = hecke_mul(result, generator)
    return result, negatives


def initial_coeffs() -> HeckeCoeffs:
    """Return the row n=1, the image of sigma_1 sigma_2^-1 times q."""
    return HeckeCoeffs(n=1, c0=ZERO, c1=1 - Q, c2=ZERO, c12=ONE, c21=ZERO, c121=ZERO)


def step(prev: HeckeCoeffs) -> HeckeCoeffs:
    """Return the row n+1 from the row n."""
    q_minus_1 = Q - 1
    q_minus_1_squared = q_minus_1 * q_minus_1
    q_q_minus_1 = Q * q_minus_1
    q_squared = Q * Q
    row = HeckeCoeffs(
        n=prev.n + 1,
        c0=q_squared * prev.c21 - q_q_minus_1 * prev.c1,
        c1=-(q_minus_1_squared * prev.c1) - q_minus_1 * prev.c0 + q_squared * prev.c121,
        c2=Q * prev.c1,
        c12=q_minus_1 * prev.c1 + prev.c0,
        c21=-(q_minus_1 * prev.c2)
        + Q * prev.c12
        - q_minus_1_squared * prev.c21
        + q_q_minus_1 * prev.c121,
        c121=prev.c2 + q_minus_1 * prev.c21,
    )
    if row.c121:
        logger.warning("Coefficient C121 of row %d is nonzero: %s", row.n, row.c121)
    return row


def iter_coeffs(n_max: int, start: Optional[HeckeCoeffs] = None) -> Iterator[HeckeCoeffs]:
    """Yield the rows 1, 2, ..., n_max in order.

    Parameters
    ----------
    n_max: int
        Last row to produce.
    start: Optional[HeckeCoeffs] = None
        Row to resume from, by default the initial row.
    """
    row = initial_coeffs() if start is None else start
    while row.n <= n_max:
        yield row
        row = step(row)


def coeffs(n: int) -> HeckeCoeffs:
    """Return the row n.

    Raises
    ------
    InvalidArgumentError
        If n is not positive.

    >>> print(coeffs(2).c0)
    q - 2*q^2 + q^3
    """
    if n < 1:
        raise InvalidArgumentError(f"The braid power must be positive, got {n}.")
    row = initial_coeffs()
    for _ in range(n - 1):
        row = step(row)
    return row


def oracle_element() -> HeckeElementH3:
    """Return q times the image of sigma_1 sigma_2^-1, i.e. -(q-1)T1 + T1T2."""
    return HeckeElementH3.from_words({(1,): 1 - Q, (1, 2): ONE})


def verify_row(n: int, row: Optional[HeckeCoeffs] = None) -> bool:
    """Whether the recursion row agrees with direct multiplication in H_3.

    Parameters
    ----------
    n: int
        Braid power.
    row: Optional[HeckeCoeffs] = None
        Row to check, computed with the recursion when not given.
    """
    if row is None:
        row = coeffs(n)
    expected = oracle_element().power(n)
    return row.n == n and row.to_element() == expected


def observed_degrees(row: HeckeCoeffs) -> Dict[str, Optional[int]]:
    """Return the degree of each coefficient, None for the zero polynomial."""
    return {
        name: (value.max_degree if value else None)
        for name, value in zip(BASIS_NAMES, row.as_tuple())
    }


def degree_bounds(n: int) -> Dict[str, int]:
    """Return the upper bounds on the coefficient degrees of row n."""
    return {
        "C0": 2 * n - 1,
        "C1": 2 * n - 1,
        "C2": 2 * n - 2,
        "C12": 2 * n - 2,
        "C21": 2 * n - 3,
    }
