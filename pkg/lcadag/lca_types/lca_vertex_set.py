from typing import Iterable

import numpy


class VertexSet(tuple):
    """
    A sorted, duplicate free tuple of vertex ids. Equality, hashing and
    ordering are the tuple's, so two VertexSets with the same ids are equal
    no matter how they were built
    """

    __slots__ = ()

    def __new__(cls, ids: Iterable[int] = ()):
        return super().__new__(cls, sorted({int(i) for i in ids}))

    @classmethod
    def from_mask(cls, mask: numpy.ndarray) -> "VertexSet":
        return cls(numpy.flatnonzero(mask).tolist())

    def to_mask(self, n: int) -> numpy.ndarray:
        mask = numpy.zeros(n, dtype=bool)
        if self:
            mask[list(self)] = True
        return mask

    def __and__(self, other: Iterable[int]) -> "VertexSet":
        other_ids = set(other)
        return VertexSet(i for i in self if i in other_ids)

    def __or__(self, other: Iterable[int]) -> "VertexSet":
        return VertexSet(tuple(self) + tuple(other))

    def __sub__(self, other: Iterable[int]) -> "VertexSet":
        other_ids = set(other)
        return VertexSet(i for i in self if i not in other_ids)

    def issubset(self, other: Iterable[int]) -> bool:
        other_ids = other if isinstance(other, (set, frozenset)) else set(other)
        return all(i in other_ids for i in self)

    def __repr__(self) -> str:
        return "VertexSet(%s)" % list(self)
