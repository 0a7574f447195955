import re
from typing import List, Union

from lcadag.lca_constants import COMMENT_CHAR, TRACE_DEFAULT_ORIGIN
from lcadag.lca_helpers import ParseError
from lcadag.lca_types import ConstructionTrace, TraceStep

"""
Construction trace file format
-----------------------------------
file ::= [<origin>] {<step>}
origin ::= "origin" <label>
step ::= "leaf" <label> "<-" "{" <label> {"," <label>} "}"

Blank lines and "#" comments are ignored. Without an origin line the
trace starts from "v0". An empty file is the trace of the single vertex.
"""

_ORIGIN_RE = re.compile(r"^origin\s+(\S+)$")
_STEP_RE = re.compile(r"^leaf\s+(\S+)\s+<-\s+\{([^{}\s]*)\}$")


def parse_trace(text: str) -> Union[ConstructionTrace, str]:
    origin = None
    steps = []  # type: List[TraceStep]
    for i, line in enumerate(text.splitlines(), start=1):
        line = line.split(COMMENT_CHAR, 1)[0].strip()
        if not line:
            continue
        origin_match = _ORIGIN_RE.match(line)
        if origin_match:
            if origin is not None or steps:
                return "Line {}: the origin must come once, before every step".format(i)
            origin = origin_match.group(1)
            continue
        step_match = _STEP_RE.match(line)
        if not step_match:
            return "Line {}: expected 'leaf <label> <- {{p1,p2}}', got '{}'".format(i, line)
        parents = [p for p in step_match.group(2).split(",") if p]
        if not parents:
            return "Line {}: leaf '{}' needs at least one parent".format(i, step_match.group(1))
        steps.append(TraceStep(step_match.group(1), tuple(parents)))
    return ConstructionTrace(origin if origin is not None else TRACE_DEFAULT_ORIGIN, tuple(steps))


def load_trace(text: str) -> ConstructionTrace:
    parsed = parse_trace(text)
    if isinstance(parsed, str):
        match = re.match(r"Line (\d+)", parsed)
        raise ParseError(parsed, line=int(match.group(1)) if match else None)
    return parsed
