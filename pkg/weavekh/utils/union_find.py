"""Disjoint-set forest over the integers 0..size-1."""

from typing import List


class UnionFind:
    """Union-find with path halving and union by size.

    Parameters
    ----------
    size: int,
        Number of elements.
    """

    __slots__ = ("_parent", "_size", "_components")

    def __init__(self, size: int):
        self._parent: List[int] = list(range(size))
        self._size: List[int] = [1] * size
        self._components = size

    def find(self, node: int) -> int:
        parent = self._parent
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    def union(self, first: int, second: int) -> bool:
        """Merge the sets of the two nodes, returning whether they were apart."""
        first, second = self.find(first), self.find(second)
        if first == second:
            return False
        if self._size[first] < self._size[second]:
            first, second = second, first
        self._parent[second] = first
        self._size[first] += self._size[second]
        self._components -= 1
        return True

    @property
    def components(self) -> int:
        return self._components
