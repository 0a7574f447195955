import enum
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from lcadag.lca_constants import (
    ROUTE_DESCENDANT_CLOSED,
    ROUTE_JOIN_SEMILATTICE,
    ROUTE_LXT_LEAF_PAIRS,
    ROUTE_PAIRWISE_VERTEX,
)


class Route(enum.Enum):
    PAIRWISE_VERTEX = ROUTE_PAIRWISE_VERTEX
    LXT_LEAF_PAIRS = ROUTE_LXT_LEAF_PAIRS
    JOIN_SEMILATTICE = ROUTE_JOIN_SEMILATTICE
    DESCENDANT_CLOSED = ROUTE_DESCENDANT_CLOSED

    @classmethod
    def from_name(cls, name: str) -> "Route":
        for route in cls:
            if route.value == name:
                return route
        raise ValueError(
            f"Unknown route '{name}', use one of {', '.join(r.value for r in cls)}"
        )


@dataclass(frozen=True)
class LcaWitness:
    """
    Why the global lca-property fails. kind is one of the WITNESS_*
    constants, all vertex fields hold labels so the witness can be printed
    or serialized as is
    """

    kind: str
    query: Tuple[str, ...] = ()
    lca: Tuple[str, ...] = ()
    sets: Tuple[Tuple[str, ...], ...] = ()

    def to_json(self) -> Dict[str, Any]:
        out = {"type": self.kind, "vertices": list(self.query), "lca": list(self.lca)}
        if self.sets:
            out["sets"] = [list(s) for s in self.sets]
        return out


@dataclass(frozen=True)
class GlobalLcaReport:
    holds: bool
    route: Route
    witness: Optional[LcaWitness] = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError(f"A failing {self.route.value} report needs a witness")

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer with the witness that explains a no"""

    holds: bool
    witness: Any = None
    reason: str = ""
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.holds
