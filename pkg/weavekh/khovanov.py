"""Khovanov ranks of alternating knots from their Jones polynomial and signature.

For a non-split alternating knot the Khovanov polynomial is determined by
the Jones polynomial V and the signature s:

    Kh'(-Q^2) = (Q^s V(Q^2) - 1) / (1 - Q^2)
    Kh(t, Q) = Q^-s ((Q^-1 + Q) + (Q^-1 + t Q^3) Kh'(t Q^2))

so no chain complex is ever built.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import pandas as pd

from weavekh.diagram import signature_closed_form
from weavekh.exceptions import InvalidArgumentError, NegativeRankError
from weavekh.hecke import HeckeCoeffs
from weavekh.jones import JonesResult, jones_w3
from weavekh.laurent import BiLaurentPoly, LaurentPoly, exact_div, shift, substitute_knight
from weavekh.utils import abbreviate_integer

logger = logging.getLogger(__name__)


def _q_squared_image(v: LaurentPoly) -> LaurentPoly:
    """Return V(Q^2) as a polynomial in Q."""
    return v.rename("Q").substitute_power(2)


def _unknot_pair(sigma: int) -> BiLaurentPoly:
    """Return Q^-s (Q^-1 + Q)."""
    return BiLaurentPoly({(0, -1 - sigma): 1, (0, 1 - sigma): 1})


def _knight_factor(sigma: int) -> BiLaurentPoly:
    """Return Q^-s (Q^-1 + t Q^3)."""
    return BiLaurentPoly({(0, -1 - sigma): 1, (1, 3 - sigma): 1})


def kh_prime(v: LaurentPoly, sigma: int) -> BiLaurentPoly:
    """Return Kh'(t Q^2) from the Jones polynomial in t and the signature.

    Raises
    ------
    NonExactDivisionError
        If Q^s V(Q^2) - 1 is not divisible by 1 - Q^2, which means the input
        is not the Jones polynomial of a knot with that signature.

    >>> t = LaurentPoly.monomial(1, var="t")
    >>> print(kh_prime(t**-2 - t**-1 + 1 - t + t**2, 0))
    t^-2*Q^-4 + t*Q^2
    """
    numerator = shift(_q_squared_image(v), sigma) - 1
    denominator = 1 - LaurentPoly.monomial(2, var="Q")
    return substitute_knight(exact_div(numerator, denominator))


def kh_poly(khp: BiLaurentPoly, sigma: int) -> BiLaurentPoly:
    """Return Kh(t, Q) = Q^-s ((Q^-1 + Q) + (Q^-1 + t Q^3) Kh'(t Q^2)).

    Raises
    ------
    NegativeRankError
        If a coefficient comes out negative.
    """
    poly = _unknot_pair(sigma) + _knight_factor(sigma) * khp
    negative = [(key, value) for key, value in poly.items() if value < 0]
    if negative:
        (i, j), value = negative[0]
        raise NegativeRankError(
            f"The Khovanov polynomial has the negative coefficient {value} at t^{i} Q^{j}."
        )
    return poly


@dataclass(frozen=True)
class KhovanovTable:
    """Bigraded Khovanov ranks of a knot, only nonzero ranks being stored."""

    sigma: int
    kh_poly: BiLaurentPoly
    n: Optional[int] = None
    jones: Optional[LaurentPoly] = field(default=None, compare=False)

    @property
    def ranks(self) -> Dict[Tuple[int, int], int]:
        return dict(self.kh_poly.terms)

    def rank(self, i: int, j: int) -> int:
        return self.kh_poly.coefficient(i, j)

    @cached_property
    def betti_line(self) -> List[Tuple[int, int]]:
        return betti_line(self)

    @property
    def h01(self) -> int:
        """Rank in homological degree 0 and quantum degree 1."""
        return self.rank(0, 1)

    @property
    def h01_paired(self) -> int:
        """Part of the rank at (0, 1) made of knight-move pairs.

        The generators of the unknot pair Q^-s (Q^-1 + Q) are left out. For
        the weaving knots W(3, n) this equals the rank at (1, 3).
        """
        return self.h01 - _unknot_pair(self.sigma).coefficient(0, 1)

    @property
    def h01_flagged(self) -> bool:
        """Whether the rank at (0, 1) exceeds a nonzero rank at (1, 3)."""
        return 0 < self.rank(1, 3) < self.h01

    def to_csv_frame(self) -> pd.DataFrame:
        """Return the ranks as a DataFrame with columns i, j, rank."""
        rows = self.kh_poly.items()
        return pd.DataFrame(
            {
                "i": [i for (i, _), _ in rows],
                "j": [j for (_, j), _ in rows],
                "rank": [str(rank) for _, rank in rows],
            },
            columns=["i", "j", "rank"],
        )

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "sigma": self.sigma,
            "betti_line": [[i, str(rank)] for i, rank in self.betti_line],
            "total": str(total_rank_line(self)),
            "h01": str(self.h01),
            "h01_paired": str(self.h01_paired),
        }


def khovanov_from_jones(
    v: LaurentPoly, sigma: int, n: Optional[int] = None
) -> KhovanovTable:
    """Return the Khovanov table of an alternating knot.

    Parameters
    ----------
    v: LaurentPoly
        Jones polynomial in t of a non-split alternating knot.
    sigma: int
        Signature of the knot.
    n: Optional[int] = None
        Label stored with the table.
    """
    poly = kh_poly(kh_prime(v, sigma), sigma)
    return KhovanovTable(sigma=sigma, kh_poly=poly, n=n, jones=v)


def khovanov_table(
    n: int,
    row: Optional[HeckeCoeffs] = None,
    jones: Optional[JonesResult] = None,
    flag_convention: bool = True,
) -> KhovanovTable:
    """Return the Khovanov table of the weaving knot W(3, n).

    Parameters
    ----------
    n: int
        Number of braid periods, not a multiple of 3.
    row: Optional[HeckeCoeffs] = None
        Precomputed coefficient row n.
    jones: Optional[JonesResult] = None
        Precomputed Jones polynomial of W(3, n).
    flag_convention: bool = True
        Whether to log a warning when the rank at (0, 1) exceeds the one at
        (1, 3). Sweeps over many rows turn it off and report once.

    Raises
    ------
    InvalidArgumentError
        If 3 divides n, since the closure is then a link.
    """
    if n >= 1 and n % 3 == 0:
        raise InvalidArgumentError(
            f"W(3,{n}) is a 3-component link, its Khovanov ranks are not derived here."
        )
    if jones is None:
        jones = jones_w3(n, row)
    table = khovanov_from_jones(jones.v, signature_closed_form(3, n), n=n)
    if flag_convention and table.h01_flagged:
        logger.warning(
            "W(3,%d): rank at (0,1) is %s, larger than %s at (1,3); h01_paired leaves out the unknot pair",
            n,
            abbreviate_integer(table.h01),
            abbreviate_integer(table.rank(1, 3)),
        )
    logger.debug("W(3,%d): %d nonzero Khovanov ranks", n, len(table.ranks))
    return table


def rank_line(tbl: KhovanovTable, offset: int) -> List[Tuple[int, int]]:
    """Return the (i, rank) pairs with j - 2i = offset, ascending in i."""
    return [(i, rank) for (i, j), rank in tbl.kh_poly.items() if j - 2 * i == offset]


def betti_line(tbl: KhovanovTable) -> List[Tuple[int, int]]:
    """Return the ranks on the upper support line j = 2i - s + 1.

    >>> from weavekh.laurent import BiLaurentPoly
    >>> betti_line(KhovanovTable(0, BiLaurentPoly({(0, -1): 1, (0, 1): 1})))
    [(0, 1)]
    """
    return rank_line(tbl, 1 - tbl.sigma)


def total_rank_line(tbl: KhovanovTable) -> int:
    """Return the sum of the ranks on the Betti line."""
    return sum(rank for _, rank in betti_line(tbl))


def support_offsets(tbl: KhovanovTable) -> List[int]:
    """Return the sorted values of j - 2i that carry a nonzero rank."""
    return sorted({j - 2 * i for i, j in tbl.kh_poly.terms})


def euler_characteristic_holds(tbl: KhovanovTable, v: Optional[LaurentPoly] = None) -> bool:
    """Whether Kh(-1, Q) equals (Q^-1 + Q) V(Q^2)."""
    if v is None:
        v = tbl.jones
    if v is None:
        raise InvalidArgumentError("The Jones polynomial of the table is unknown.")
    pair = LaurentPoly({-1: 1, 1: 1}, var="Q")
    return tbl.kh_poly.eval_first(-1) == pair * _q_squared_image(v)


def knight_move_divisible(tbl: KhovanovTable) -> bool:
    """Whether Kh - Q^-s (Q^-1 + Q) is divisible by Q^-1 + t Q^3."""
    rest = tbl.kh_poly - _unknot_pair(tbl.sigma)
    return rest.divides_by(BiLaurentPoly({(0, -1): 1, (1, 3): 1}))
