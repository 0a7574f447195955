from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from lcadag.lca_helpers import InconsistentFamily
from lcadag.lca_types.lca_vertex_set import VertexSet


class SetSystem:
    """
    A duplicate free family of vertex sets over a ground set.

    universe maps ids to labels (usually the labels of the host Dag).
    witness, when present, maps a vertex id to the index of its defining
    member, like v -> C(v) for clusters or v -> D(v) for descendants.
    Members keep the order they were first defined in, so scans over pairs
    are deterministic.
    """

    def __init__(
        self,
        universe: Sequence[str],
        ground: Iterable[int],
        members: Iterable[Iterable[int]],
        witness: Optional[Mapping[int, int]] = None,
        name: str = "",
    ):
        self.universe = tuple(universe)
        self.ground = VertexSet(ground)
        self.members = tuple(VertexSet(m) for m in members)
        self.name = name
        self._index = {}  # type: Dict[VertexSet, int]
        for i, member in enumerate(self.members):
            if member in self._index:
                raise InconsistentFamily(
                    f"{self._describe()}: member {self.format(member)} appears twice",
                    witness=self.labels_of(member),
                )
            if not member.issubset(self.ground):
                raise InconsistentFamily(
                    f"{self._describe()}: member {self.format(member)} is not"
                    f" inside the ground set {self.format(self.ground)}",
                    witness=self.labels_of(member),
                )
            self._index[member] = i
        self.witness = dict(witness) if witness is not None else None
        if self.witness is not None:
            for v, i in self.witness.items():
                if not 0 <= i < len(self.members):
                    raise InconsistentFamily(
                        f"{self._describe()}: vertex {self.universe[v]} points to"
                        f" member #{i} which does not exist",
                        witness=self.universe[v],
                    )

    @classmethod
    def from_defining_sets(
        cls,
        universe: Sequence[str],
        ground: Iterable[int],
        defining: Iterable[Tuple[int, Iterable[int]]],
        name: str = "",
    ) -> "SetSystem":
        """
        Builds the family {S(v)} from (v, S(v)) pairs, merging equal sets and
        recording v -> index of S(v) as the witness
        """
        members = []  # type: List[VertexSet]
        index = {}  # type: Dict[VertexSet, int]
        witness = {}  # type: Dict[int, int]
        for v, ids in defining:
            member = VertexSet(ids)
            if member not in index:
                index[member] = len(members)
                members.append(member)
            witness[v] = index[member]
        return cls(universe, ground, members, witness, name)

    def _describe(self) -> str:
        return f"Set system '{self.name}'" if self.name else "Set system"

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, member) -> bool:
        return VertexSet(member) in self._index

    def index(self, member: Iterable[int]) -> int:
        return self._index[VertexSet(member)]

    def member_of(self, v: int) -> VertexSet:
        if self.witness is None or v not in self.witness:
            raise KeyError(f"{self._describe()} has no defining set for vertex {v}")
        return self.members[self.witness[v]]

    def witnesses_of(self, member: Iterable[int]) -> VertexSet:
        if self.witness is None:
            return VertexSet()
        i = self.index(member)
        return VertexSet(v for v, j in self.witness.items() if j == i)

    def labels_of(self, member: Iterable[int]) -> Tuple[str, ...]:
        return tuple(sorted(self.universe[v] for v in member))

    def format(self, member: Iterable[int]) -> str:
        return "{" + ",".join(self.labels_of(member)) + "}"

    def family(self) -> FrozenSet[FrozenSet[str]]:
        """Label-level family, comparable across graphs with different ids"""
        return frozenset(frozenset(self.labels_of(m)) for m in self.members)

    def sorted_members(self) -> List[VertexSet]:
        return sorted(self.members, key=lambda m: (len(m), self.labels_of(m)))

    def to_json(self) -> List[List[str]]:
        return [list(self.labels_of(m)) for m in self.sorted_members()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.family() == other.family() and set(
            self.labels_of(self.ground)
        ) == set(other.labels_of(other.ground))

    def __hash__(self):
        return hash(self.family())

    def __repr__(self) -> str:
        body = ",".join(self.format(m) for m in self.sorted_members())
        return f"SetSystem({self.name or '?'}: {{{body}}})"
