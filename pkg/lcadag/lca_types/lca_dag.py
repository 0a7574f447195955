import functools
import re
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy

from lcadag.lca_constants import TRACE_DEFAULT_ORIGIN
from lcadag.lca_helpers import (
    CycleDetected,
    DuplicateEdge,
    DuplicateLabel,
    InvalidLabel,
    SelfLoop,
    format_labels,
)
from lcadag.lca_types.lca_poset import Poset
from lcadag.lca_types.lca_vertex_set import VertexSet

_LABEL_RE = re.compile(r"^\S+$")


def check_label(label: str) -> None:
    if not isinstance(label, str) or not _LABEL_RE.match(label):
        raise InvalidLabel(
            f"Label {label!r} must be a non-empty string without whitespace",
            witness=label,
        )


class Dag:
    """
    A labeled directed acyclic graph on the dense ids 0..n-1.

    Construction validates everything: labels, edge endpoints, self loops,
    parallel edges and cycles. Afterwards a Dag never changes, derived
    structure (networkx view, reachability, topological order) is cached.
    Equality is label-level, two Dags are equal when they have the same
    labels and the same labeled edges, no matter which ids they use.
    """

    def __init__(self, labels: Sequence[str], edges: Iterable[Tuple[int, int]]):
        self.labels = tuple(labels)
        if not self.labels:
            raise InvalidLabel("A DAG needs at least one vertex", witness=())
        for label in self.labels:
            check_label(label)
        if len(set(self.labels)) != len(self.labels):
            dup = next(l for i, l in enumerate(self.labels) if l in self.labels[:i])
            raise DuplicateLabel(f"Label '{dup}' is used twice", witness=dup)

        n = len(self.labels)
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidLabel(
                    f"Edge ({u},{v}) has an endpoint outside 0..{n - 1}",
                    witness=(u, v),
                )
            if u == v:
                raise SelfLoop(
                    f"'{self.labels[u]}' has an edge to itself",
                    witness=(self.labels[u], self.labels[u]),
                )
            if (u, v) in edge_set:
                raise DuplicateEdge(
                    f"Edge '{self.labels[u]}' -> '{self.labels[v]}' appears twice",
                    witness=(self.labels[u], self.labels[v]),
                )
            edge_set.add((u, v))
        self.edges = frozenset(edge_set)  # type: FrozenSet[Tuple[int, int]]

        children = [[] for _ in range(n)]
        parents = [[] for _ in range(n)]
        for u, v in self.edges:
            children[u].append(v)
            parents[v].append(u)
        self.children = tuple(VertexSet(c) for c in children)
        self.parents = tuple(VertexSet(p) for p in parents)

        graph = self.to_networkx()
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [self.labels[u] for u, _ in nx.find_cycle(graph)]
            raise CycleDetected(
                f"The graph has the cycle {' -> '.join(cycle + cycle[:1])}",
                witness=tuple(cycle),
            )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def ids(self) -> range:
        return range(len(self.labels))

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def labels_of(self, vs: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self.labels[v] for v in vs)

    def format(self, vs: Iterable[int]) -> str:
        return format_labels(self.labels_of(vs))

    @functools.cached_property
    def _id_by_label(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def id_of(self, label: str) -> int:
        try:
            return self._id_by_label[label]
        except KeyError:
            raise InvalidLabel(f"'{label}' is not a vertex of this DAG", witness=label)

    def ids_of(self, labels: Iterable[str]) -> VertexSet:
        return VertexSet(self.id_of(label) for label in labels)

    def has_label(self, label: str) -> bool:
        return label in self._id_by_label

    def in_degree(self, v: int) -> int:
        return len(self.parents[v])

    def out_degree(self, v: int) -> int:
        return len(self.children[v])

    @functools.cached_property
    def labeled_edges(self) -> FrozenSet[Tuple[str, str]]:
        return frozenset((self.labels[u], self.labels[v]) for u, v in self.edges)

    def sorted_edges(self):
        """Edges in (tail, head) id order, used wherever output must be stable"""
        return sorted(self.edges)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from((v, {"label": l}) for v, l in enumerate(self.labels))
        graph.add_edges_from(self.edges)
        return graph

    @functools.cached_property
    def nx_graph(self) -> nx.DiGraph:
        return self.to_networkx()

    @functools.cached_property
    def topological_order(self) -> Tuple[int, ...]:
        return tuple(nx.lexicographical_topological_sort(self.nx_graph))

    @functools.cached_property
    def topological_index(self) -> Tuple[int, ...]:
        index = [0] * self.n
        for i, v in enumerate(self.topological_order):
            index[v] = i
        return tuple(index)

    @functools.cached_property
    def poset(self) -> Poset:
        n = self.n
        desc = numpy.zeros((n, n), dtype=bool)
        for v in reversed(self.topological_order):
            desc[v, v] = True
            for c in self.children[v]:
                desc[v] |= desc[c]
        # desc[v, u]: u is reachable from v, that is u <= v
        return Poset(desc.T, self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return (
            frozenset(self.labels) == frozenset(other.labels)
            and self.labeled_edges == other.labeled_edges
        )

    def __hash__(self):
        return hash((frozenset(self.labels), self.labeled_edges))

    def __repr__(self) -> str:
        edges = ", ".join(f"{a}->{b}" for a, b in sorted(self.labeled_edges))
        return f"Dag(n={self.n}, edges=[{edges}])"


def k1(label: Optional[str] = None) -> Dag:
    return Dag([label if label is not None else TRACE_DEFAULT_ORIGIN], [])
