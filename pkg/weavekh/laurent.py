"""Exact Laurent polynomials over the integers, in one and two variables.

Coefficients are Python integers, so nothing overflows however large the
knot gets. Both classes are immutable and kept in canonical form: no zero
coefficient is ever stored and the zero polynomial has no terms.

>>> t = LaurentPoly.monomial(1, var="t")
>>> print(t**-2 - t**-1 + 1 - t + t**2)
t^-2 - t^-1 + 1 - t + t^2
"""

import math
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from weavekh.exceptions import (
    InvalidArgumentError,
    NonExactDivisionError,
    OddExponentError,
    VariableMismatchError,
    ZeroWithNegativeExponentError,
)

Number = Union[int, "LaurentPoly"]


def _format_sum(terms: Iterable[Tuple[int, str]]) -> str:
    """Join (coefficient, monomial body) pairs into a signed sum."""
    pieces: List[str] = []
    for coefficient, body in terms:
        magnitude = abs(coefficient)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if coefficient < 0 else text)
        else:
            pieces.append(f" - {text}" if coefficient < 0 else f" + {text}")
    return "".join(pieces) if pieces else "0"


def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


class LaurentPoly:
    """Univariate Laurent polynomial with exact integer coefficients.

    Parameters
    ----------
    terms: Optional[Mapping[int, int]] = None
        Map from exponent to coefficient. Zero coefficients are dropped.
    var: str = "q"
        Name of the variable, used for display and to refuse mixing
        polynomials in different variables.
    """

    __slots__ = ("_terms", "_var")

    def __init__(self, terms: Optional[Mapping[int, int]] = None, var: str = "q"):
        self._terms: Dict[int, int] = {
            int(exponent): int(coefficient)
            for exponent, coefficient in (terms or {}).items()
            if coefficient != 0
        }
        self._var = var

    @classmethod
    def _trusted(cls, terms: Dict[int, int], var: str) -> "LaurentPoly":
        """Build from a dict already known to hold only nonzero integers."""
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._var = var
        return poly

    @classmethod
    def zero(cls, var: str = "q") -> "LaurentPoly":
        return cls._trusted({}, var)

    @classmethod
    def constant(cls, value: int, var: str = "q") -> "LaurentPoly":
        return cls({0: value}, var)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "q") -> "LaurentPoly":
        return cls({exponent: coefficient}, var)

    @classmethod
    def from_coefficients(
        cls, coefficients: Sequence[int], low: int = 0, var: str = "q"
    ) -> "LaurentPoly":
        """Build from a dense ascending coefficient list starting at exponent ``low``.

        >>> print(LaurentPoly.from_coefficients([1, -2, 1]))
        1 - 2*q + q^2
        """
        return cls._trusted(
            {low + k: c for k, c in enumerate(coefficients) if c != 0}, var
        )

    @property
    def var(self) -> str:
        return self._var

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[int, int]]:
        """Return the (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise InvalidArgumentError("The zero polynomial has no degree.")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise InvalidArgumentError("The zero polynomial has no degree.")
        return max(self._terms)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def dense(self) -> List[int]:
        """Return the coefficients from min_degree to max_degree, zeros included."""
        if not self._terms:
            return []
        low = self.min_degree
        values = [0] * (self.max_degree - low + 1)
        for exponent, coefficient in self._terms.items():
            values[exponent - low] = coefficient
        return values

    def rename(self, var: str) -> "LaurentPoly":
        """Return the same polynomial in a differently named variable."""
        return LaurentPoly._trusted(dict(self._terms), var)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace the variable x by x^k, e.g. V(t) into V(Q^2) with k=2."""
        if k == 0:
            return LaurentPoly.constant(sum(self._terms.values()), self._var)
        return LaurentPoly._trusted(
            {k * e: c for e, c in self._terms.items()}, self._var
        )

    def is_palindromic(self) -> bool:
        """Whether the coefficients read the same from both ends of the span."""
        values = self.dense()
        return values == values[::-1]

    def _check(self, other: "LaurentPoly"):
        if other._var != self._var:
            raise VariableMismatchError(
                f"Cannot combine a polynomial in {self._var} with one in {other._var}."
            )

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = result.get(exponent, 0) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return LaurentPoly._trusted(result, self._var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._trusted(
            {e: -c for e, c in self._terms.items()}, self._var
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly.zero(self._var)
        # The sparser factor drives the outer loop, the denser one is walked
        # as a list.
        sparse, dense = (
            (self, other) if len(self._terms) <= len(other._terms) else (other, self)
        )
        values = dense.dense()
        low = dense.min_degree
        sparse_low = sparse.min_degree
        result = [0] * (sparse.max_degree - sparse_low + len(values))
        for exponent, coefficient in sparse._terms.items():
            offset = exponent - sparse_low
            for k, value in enumerate(values):
                if value:
                    result[offset + k] += coefficient * value
        return LaurentPoly.from_coefficients(result, low + sparse_low, self._var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self._terms) != 1:
                raise InvalidArgumentError(
                    "Only monomials can be raised to negative powers."
                )
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise InvalidArgumentError(
                    "Only unit monomials can be raised to negative powers."
                )
            return LaurentPoly.monomial(e * exponent, c ** (-exponent), self._var)
        result = LaurentPoly.constant(1, self._var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._var == other._var and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._var, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return _format_sum((c, _power(self._var, e)) for e, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self._var!r})"

    def to_json(self) -> Dict:
        """Return the JSON form, coefficients as decimal strings."""
        return {"var": self._var, "terms": [[e, str(c)] for e, c in self.items()]}

    @classmethod
    def from_json(cls, payload: Mapping) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in payload["terms"]}, payload["var"])


class BiLaurentPoly:
    """Laurent polynomial in two variables with exact integer coefficients.

    Parameters
    ----------
    terms: Optional[Mapping[Tuple[int, int], int]] = None
        Map from exponent pair to coefficient.
    variables: Tuple[str, str] = ("t", "Q")
        Names of the first and second variable.
    """

    __slots__ = ("_terms", "_vars")

    def __init__(
        self,
        terms: Optional[Mapping[Tuple[int, int], int]] = None,
        variables: Tuple[str, str] = ("t", "Q"),
    ):
        self._terms: Dict[Tuple[int, int], int] = {
            (int(i), int(j)): int(c)
            for (i, j), c in (terms or {}).items()
            if c != 0
        }
        self._vars = tuple(variables)

    @property
    def variables(self) -> Tuple[str, str]:
        return self._vars

    @property
    def terms(self) -> Mapping[Tuple[int, int], int]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        """Return the terms sorted by first then second exponent."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        return iter(self.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def _check(self, other: "BiLaurentPoly"):
        if other._vars != self._vars:
            raise VariableMismatchError(
                f"Cannot combine polynomials in {self._vars} and {other._vars}."
            )

    def __add__(self, other: "BiLaurentPoly") -> "BiLaurentPoly":
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        self._check(other)
        result = dict(self._terms)
        for key, coefficient in other._terms.items():
            result[key] = result.get(key, 0) + coefficient
        return BiLaurentPoly(result, self._vars)

    def __neg__(self) -> "BiLaurentPoly":
        return BiLaurentPoly({k: -c for k, c in self._terms.items()}, self._vars)

    def __sub__(self, other: "BiLaurentPoly") -> "BiLaurentPoly":
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "BiLaurentPoly":
        if isinstance(other, int):
            return BiLaurentPoly(
                {k: other * c for k, c in self._terms.items()}, self._vars
            )
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        self._check(other)
        result: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, 0) + c1 * c2
        return BiLaurentPoly(result, self._vars)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._vars, frozenset(self._terms.items())))

    def eval_first(self, value: int) -> LaurentPoly:
        """Substitute an integer for the first variable.

        >>> kh = BiLaurentPoly({(0, 1): 1, (1, 1): 1})
        >>> print(kh.eval_first(-1))
        0
        """
        result: Dict[int, int] = {}
        for (i, j), coefficient in self._terms.items():
            if value == 0 and i != 0:
                if i < 0:
                    raise ZeroWithNegativeExponentError(
                        f"Cannot set {self._vars[0]}=0 with negative exponents."
                    )
                continue
            weight = value**i if i >= 0 else None
            if weight is None:
                if value not in (1, -1):
                    raise InvalidArgumentError(
                        "Negative exponents can only be evaluated at 1 or -1."
                    )
                weight = value ** (-i)
            result[j] = result.get(j, 0) + coefficient * weight
        return LaurentPoly(result, self._vars[1])

    def _bounds(self) -> Tuple[int, int, int, int]:
        first = [i for i, _ in self._terms]
        second = [j for _, j in self._terms]
        return min(first), max(first), min(second), max(second)

    def exact_div(self, den: "BiLaurentPoly") -> "BiLaurentPoly":
        """Return the quotient of an exact division by ``den``.

        Division proceeds from the lexicographically lowest term; every
        quotient exponent is confined to the box allowed by the degrees in
        each variable, which guarantees termination.

        Raises
        ------
        NonExactDivisionError
            If ``den`` does not divide this polynomial.
        """
        self._check(den)
        if den.is_zero():
            raise InvalidArgumentError("Division by the zero polynomial.")
        if self.is_zero():
            return BiLaurentPoly({}, self._vars)
        ni_lo, ni_hi, nj_lo, nj_hi = self._bounds()
        di_lo, di_hi, dj_lo, dj_hi = den._bounds()
        den_low, den_lead = min(den._terms.items())
        remainder = dict(self._terms)
        quotient: Dict[Tuple[int, int], int] = {}
        while remainder:
            low, coefficient = min(remainder.items())
            i, j = low[0] - den_low[0], low[1] - den_low[1]
            value, rest = divmod(coefficient, den_lead)
            if (
                rest
                or not ni_lo - di_lo <= i <= ni_hi - di_hi
                or not nj_lo - dj_lo <= j <= nj_hi - dj_hi
            ):
                raise NonExactDivisionError(
                    f"{self} is not divisible by {den}."
                )
            quotient[(i, j)] = value
            for (a, b), c in den._terms.items():
                key = (a + i, b + j)
                updated = remainder.get(key, 0) - value * c
                if updated:
                    remainder[key] = updated
                else:
                    remainder.pop(key, None)
        return BiLaurentPoly(quotient, self._vars)

    def divides_by(self, den: "BiLaurentPoly") -> bool:
        """Whether ``den`` divides this polynomial exactly."""
        try:
            self.exact_div(den)
        except NonExactDivisionError:
            return False
        return True

    def __str__(self) -> str:
        first, second = self._vars
        return _format_sum(
            (c, "*".join(p for p in (_power(first, i), _power(second, j)) if p))
            for (i, j), c in self.items()
        )

    def __repr__(self) -> str:
        return f"BiLaurentPoly({str(self)!r}, variables={self._vars!r})"

    def to_json(self) -> Dict:
        return {
            "vars": list(self._vars),
            "terms": [[i, j, str(c)] for (i, j), c in self.items()],
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> "BiLaurentPoly":
        return cls(
            {(int(i), int(j)): int(c) for i, j, c in payload["terms"]},
            tuple(payload["vars"]),
        )


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return the exact sum of two polynomials in the same variable.

    Raises
    ------
    VariableMismatchError
        If the two polynomials are in different variables.
    """
    a._check(b)
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return the exact product of two polynomials in the same variable.

    Raises
    ------
    VariableMismatchError
        If the two polynomials are in different variables.
    """
    a._check(b)
    return a * b


def shift(a: LaurentPoly, k: int) -> LaurentPoly:
    """Multiply by the monomial var^k.

    >>> print(shift(LaurentPoly({2: 1, 1: -1}, var="t"), 3))
    -t^4 + t^5
    """
    return LaurentPoly._trusted({e + k: c for e, c in a.terms.items()}, a.var)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return num / den, provided the division leaves no remainder.

    Synthetic division from the lowest exponent upwards, followed by an
    explicit check that the remainder vanished.

    Parameters
    ----------
    num: LaurentPoly
        Dividend.
    den: LaurentPoly
        Nonzero divisor in the same variable.

    Raises
    ------
    NonExactDivisionError
        If den does not divide num.
    VariableMismatchError
        If the polynomials are in different variables.

    >>> Q = LaurentPoly.monomial(1, var="Q")
    >>> print(exact_div(Q**-4 - Q**-2 - Q**2 + Q**4, 1 - Q**2))
    Q^-4 - Q^2
    """
    num._check(den)
    if den.is_zero():
        raise InvalidArgumentError("Division by the zero polynomial.")
    if num.is_zero():
        return LaurentPoly.zero(num.var)
    num_low, num_high = num.min_degree, num.max_degree
    den_low, den_high = den.min_degree, den.max_degree
    length = (num_high - den_high) - (num_low - den_low) + 1
    if length <= 0:
        raise NonExactDivisionError(f"{num} is not divisible by {den}.")
    divisor = den.dense()
    lead = divisor[0]
    remainder = num.dense()
    quotient = [0] * length
    for k in range(length):
        coefficient = remainder[k]
        if not coefficient:
            continue
        value, rest = divmod(coefficient, lead)
        if rest:
            raise NonExactDivisionError(f"{num} is not divisible by {den}.")
        quotient[k] = value
        for m, d in enumerate(divisor):
            if d:
                remainder[k + m] -= value * d
    if any(remainder):
        raise NonExactDivisionError(f"{num} is not divisible by {den}.")
    return LaurentPoly.from_coefficients(quotient, num_low - den_low, num.var)


def substitute_knight(p: LaurentPoly, first_var: str = "t") -> BiLaurentPoly:
    """Apply Q^2 -> -X then X -> t*Q^2 term by term.

    Each term c*Q^(2k) becomes c*(-1)^k * t^k * Q^(2k).

    Raises
    ------
    OddExponentError
        If an odd power of the variable occurs.

    >>> Q = LaurentPoly.monomial(1, var="Q")
    >>> print(substitute_knight(Q**-4 - Q**2))
    t^-2*Q^-4 + t*Q^2
    """
    result: Dict[Tuple[int, int], int] = {}
    for exponent, coefficient in p.terms.items():
        if exponent % 2:
            raise OddExponentError(
                f"Odd power {p.var}^{exponent} cannot be written in {p.var}^2."
            )
        k = exponent // 2
        result[(k, exponent)] = -coefficient if k % 2 else coefficient
    return BiLaurentPoly(result, (first_var, p.var))


def eval_float(p: LaurentPoly, x: float) -> float:
    """Evaluate in floating point, for spot checks only.

    The coefficients are converted to floats, so polynomials whose
    coefficients exceed the double range raise OverflowError and large
    alternating sums lose precision.

    Raises
    ------
    ZeroWithNegativeExponentError
        If x is zero and p has a negative exponent.
    """
    if x == 0 and p and p.min_degree < 0:
        raise ZeroWithNegativeExponentError(
            f"{p} has negative exponents and cannot be evaluated at 0."
        )
    return math.fsum(float(c) * float(x) ** e for e, c in p.terms.items())
