"""Braid words of the weaving knots W(p, q) and signatures from their A-smoothing."""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple, Union

from weavekh.exceptions import InvalidArgumentError
from weavekh.utils import count_loops

logger = logging.getLogger(__name__)

Letter = Tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of the braid group on ``strands`` strands.

    Every letter is a pair (generator index in 1..strands-1, sign 1 or -1).
    """

    strands: int
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise InvalidArgumentError(
                f"A braid needs at least 2 strands, got {self.strands}."
            )
        object.__setattr__(
            self, "letters", tuple((int(i), int(s)) for i, s in self.letters)
        )
        for index, sign in self.letters:
            if not 1 <= index < self.strands:
                raise InvalidArgumentError(
                    f"Generator index {index} is out of range for {self.strands} strands."
                )
            if sign not in (1, -1):
                raise InvalidArgumentError(f"Letter signs are 1 or -1, got {sign}.")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(
            f"s{index}" if sign == 1 else f"s{index}^-1" for index, sign in self.letters
        )


@dataclass(frozen=True)
class SmoothingStats:
    """Crossing and circle counts of the all-A state of a braid closure."""

    c: int
    x: int
    y: int
    o: int


def _check_weaving(p: int, q: int):
    if p < 2:
        raise InvalidArgumentError(f"A weaving knot needs at least 2 strands, got p={p}.")
    if q < 1:
        raise InvalidArgumentError(f"The number of braid periods must be positive, got q={q}.")


def weaving_braid(p: int, q: int) -> BraidWord:
    """Return the word (s1 s2^-1 s3 ...)^q of the weaving knot W(p, q).

    >>> print(weaving_braid(3, 2))
    s1 s2^-1 s1 s2^-1
    """
    _check_weaving(p, q)
    period = [(index, 1 if index % 2 else -1) for index in range(1, p)]
    return BraidWord(p, tuple(period * q))


def smooth_stats(b: BraidWord) -> SmoothingStats:
    """Count crossings by sign and the circles of the all-A smoothing.

    The A-smoothing of a positive letter lets both strands pass, that of a
    negative letter joins them by a cap and a cup.
    """
    positives = sum(1 for _, sign in b.letters if sign == 1)
    negatives = len(b.letters) - positives
    slices = [None if sign == 1 else index - 1 for index, sign in b.letters]
    return SmoothingStats(
        c=len(b.letters),
        x=negatives,
        y=positives,
        o=count_loops(b.strands, slices),
    )


def signature_alternating(b: BraidWord) -> int:
    """Return o - y - 1, the signature of a reduced alternating diagram.

    The closure must be a reduced alternating diagram of a non-split link;
    this is not checked.
    """
    stats = smooth_stats(b)
    return stats.o - stats.y - 1


def signature_closed_form(p: int, q: int) -> int:
    """Return the signature of W(p, q): 0 for odd p, 1 - q for even p.

    >>> signature_closed_form(4, 5)
    -4
    """
    _check_weaving(p, q)
    return 0 if p % 2 else 1 - q


def crossing_number(p: int, q: int) -> int:
    """Return the number of crossings (p - 1) q of the weaving diagram."""
    _check_weaving(p, q)
    return (p - 1) * q


def support_lines(p: int, q: int) -> Tuple[int, int]:
    """Return the two values of j - 2i on which the Khovanov ranks of W(p, q) live."""
    sigma = signature_closed_form(p, q)
    return (-sigma - 1, -sigma + 1)


def is_weaving_alternating(b: BraidWord) -> bool:
    """Whether the closure is an alternating diagram in the weaving sense.

    Each generator must keep one sign, neighbouring generators must have
    opposite signs, every generator must occur, and at least three strands
    are required.
    """
    if b.strands < 3:
        return False
    signs: Dict[int, int] = {}
    for index, sign in b.letters:
        if signs.setdefault(index, sign) != sign:
            return False
    if set(signs) != set(range(1, b.strands)):
        return False
    return all(signs[i] == -signs[i + 1] for i in range(1, b.strands - 1))


def rotate(b: BraidWord, k: int) -> BraidWord:
    """Return the word cyclically rotated left by k letters."""
    if not b.letters:
        return b
    k %= len(b.letters)
    return BraidWord(b.strands, b.letters[k:] + b.letters[:k])


def signature_report(p: int, q: int) -> Dict[str, Union[int, bool]]:
    """Compare the diagram signature of W(p, q) with its closed form."""
    word = weaving_braid(p, q)
    stats = smooth_stats(word)
    signature = stats.o - stats.y - 1
    closed_form = signature_closed_form(p, q)
    agree = signature == closed_form
    if not agree:
        logger.warning(
            "Signature of W(%d,%d) from the diagram is %d, closed form gives %d",
            p,
            q,
            signature,
            closed_form,
        )
    return {
        "p": p,
        "q": q,
        "c": stats.c,
        "x": stats.x,
        "y": stats.y,
        "o": stats.o,
        "signature": signature,
        "closed_form": closed_form,
        "agree": agree,
        "alternating": is_weaving_alternating(word),
    }
