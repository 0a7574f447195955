from typing import Iterable, Optional, Sequence

import numpy

from lcadag.lca_types.lca_vertex_set import VertexSet


class Poset:
    """
    A partial order on 0..n-1 held as a dense boolean relation.
    leq[u, v] is True when u <= v, for a DAG that means u is reachable
    from v. Row u is the up-set of u, column v the down-set of v
    """

    def __init__(self, leq: numpy.ndarray, labels: Optional[Sequence[str]] = None):
        leq = numpy.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"Poset relation must be square, got shape {leq.shape}")
        leq.setflags(write=False)
        self.leq = leq
        self.n = leq.shape[0]
        self.labels = tuple(labels) if labels is not None else None

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def le(self, u: int, v: int) -> bool:
        return bool(self.leq[u, v])

    def lt(self, u: int, v: int) -> bool:
        return u != v and bool(self.leq[u, v])

    def comparable(self, u: int, v: int) -> bool:
        return bool(self.leq[u, v] or self.leq[v, u])

    def incomparable(self, u: int, v: int) -> bool:
        return not self.comparable(u, v)

    def up_mask(self, u: int) -> numpy.ndarray:
        return self.leq[u]

    def down_mask(self, v: int) -> numpy.ndarray:
        return self.leq[:, v]

    def common_up_mask(self, ids: Iterable[int]) -> numpy.ndarray:
        ids = list(ids)
        return numpy.logical_and.reduce(self.leq[ids], axis=0)

    def upper_bounds(self, u: int, v: int) -> VertexSet:
        return VertexSet.from_mask(self.leq[u] & self.leq[v])

    def minimal(self, ids: Iterable[int]) -> VertexSet:
        """The elements of ids with nothing of ids strictly below them"""
        cand = sorted(set(ids))
        if not cand:
            return VertexSet()
        sub = self.leq[numpy.ix_(cand, cand)]
        # column j counts the candidates below cand[j], itself included
        below = sub.sum(axis=0)
        return VertexSet(c for c, count in zip(cand, below) if count == 1)

    def maximal(self, ids: Iterable[int]) -> VertexSet:
        cand = sorted(set(ids))
        if not cand:
            return VertexSet()
        sub = self.leq[numpy.ix_(cand, cand)]
        above = sub.sum(axis=1)
        return VertexSet(c for c, count in zip(cand, above) if count == 1)

    def transpose(self) -> "Poset":
        return Poset(self.leq.T, self.labels)

    def is_reflexive(self) -> bool:
        return bool(numpy.all(numpy.diag(self.leq)))

    def is_antisymmetric(self) -> bool:
        both = self.leq & self.leq.T
        return bool(numpy.array_equal(both, numpy.eye(self.n, dtype=bool) & both))

    def is_transitive(self) -> bool:
        as_int = self.leq.astype(numpy.int64)
        composed = (as_int @ as_int) > 0
        return bool(numpy.all(~composed | self.leq))

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and numpy.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.leq.tobytes())

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, relations={int(self.leq.sum())})"
