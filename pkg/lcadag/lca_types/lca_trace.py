from dataclasses import dataclass
from typing import Iterable, Tuple

from lcadag.lca_constants import TRACE_DEFAULT_ORIGIN, TRACE_RESERVED_CHARS
from lcadag.lca_helpers import InvalidLabel, format_labels


def check_trace_label(label: str) -> str:
    if any(c in label for c in TRACE_RESERVED_CHARS):
        raise InvalidLabel(
            f"'{label}' holds one of '{TRACE_RESERVED_CHARS}' and cannot be written"
            " to a construction trace",
            witness=label,
        )
    return label


@dataclass(frozen=True)
class TraceStep:
    leaf: str
    parents: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(sorted(set(self.parents))))

    def to_line(self) -> str:
        for label in (self.leaf,) + self.parents:
            check_trace_label(label)
        return f"leaf {self.leaf} <- {format_labels(self.parents)}"


@dataclass(frozen=True)
class ConstructionTrace:
    """
    Steps that build a graph from the single vertex origin, one new leaf
    at a time
    """

    origin: str = TRACE_DEFAULT_ORIGIN
    steps: Tuple[TraceStep, ...] = ()

    @classmethod
    def from_steps(
        cls, origin: str, steps: Iterable[Tuple[str, Iterable[str]]]
    ) -> "ConstructionTrace":
        return cls(origin, tuple(TraceStep(leaf, tuple(ws)) for leaf, ws in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def prefix(self, size: int) -> "ConstructionTrace":
        """The trace of the first size vertices, origin included"""
        return ConstructionTrace(self.origin, self.steps[: max(size - 1, 0)])

    def to_text(self) -> str:
        origin = f"origin {check_trace_label(self.origin)}"
        return "\n".join([origin] + [s.to_line() for s in self.steps]) + "\n"
