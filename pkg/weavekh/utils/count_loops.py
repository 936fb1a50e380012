"""Count the closed loops of a closed Temperley-Lieb diagram."""

from typing import Optional, Sequence

from weavekh.utils.union_find import UnionFind


def count_loops(strands: int, slices: Sequence[Optional[int]]) -> int:
    """Return the number of loops in the closure of a stack of diagram slices.

    Every slice is either ``None``, the identity on all strands, or a
    0-based index ``i``, meaning a cap joining strands i and i+1 at the top of
    the slice and a cup joining them at its bottom, all other strands passing
    straight through. The top of the first slice is glued to the bottom of
    the last one, as in a braid closure.

    Parameters
    ----------
    strands: int,
        Number of strands.
    slices: Sequence[Optional[int]],
        The slices from top to bottom.

    Returns
    -------
    Number of connected components, each of which is a circle.

    >>> count_loops(3, [None, 1])
    2
    >>> count_loops(2, [])
    2
    """
    length = len(slices)
    if length == 0:
        return strands
    # Node level * strands + s is strand s between slice level-1 and level;
    # level `length` wraps around to level 0.
    forest = UnionFind(length * strands)
    for level, cup in enumerate(slices):
        top = level * strands
        bottom = ((level + 1) % length) * strands
        for strand in range(strands):
            if cup is not None and strand in (cup, cup + 1):
                continue
            forest.union(top + strand, bottom + strand)
        if cup is not None:
            forest.union(top + cup, top + cup + 1)
            forest.union(bottom + cup, bottom + cup + 1)
    return forest.components
