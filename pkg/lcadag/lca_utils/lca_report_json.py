"""
JSON reports of the command line tool. Keys are sorted so reports can be
compared against stored files
"""

import json
from typing import Any, Dict, Iterable, Optional

from lcadag.lca_constants import (
    WITNESS_PAIR,
    WITNESS_SET_PAIR,
    WITNESS_SUBDIVISION,
    WITNESS_SUBSET,
    WITNESS_VERTEX,
)
from lcadag.lca_types import (
    Dag,
    GlobalLcaReport,
    K22Subdivision,
    Route,
    SetSystem,
    Verdict,
    VertexSet,
)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def global_lca_json(reports: Dict[Route, GlobalLcaReport], timing_ms: float) -> Dict[str, Any]:
    first = next(iter(reports.values()))
    out = {
        "holds": first.holds,
        "predicate": "global-lca",
        "timing_ms": round(timing_ms, 3),
    }
    if len(reports) == 1:
        out["route"] = first.route.value
    else:
        out["routes"] = {route.value: report.holds for route, report in reports.items()}
    if first.witness is not None:
        out["witness"] = first.witness.to_json()
    return out


def witness_json(g: Dag, witness: Any) -> Optional[Dict[str, Any]]:
    """Verdict witnesses are in ids, turn them into labels"""
    if witness is None:
        return None
    if isinstance(witness, K22Subdivision):
        return dict(witness.to_json(g), type=WITNESS_SUBDIVISION)
    if isinstance(witness, int):
        return {"type": WITNESS_VERTEX, "vertices": [g.label_of(witness)]}
    if isinstance(witness, VertexSet):
        kind = WITNESS_PAIR if len(witness) == 2 else WITNESS_SUBSET
        return {"type": kind, "vertices": list(g.labels_of(witness))}
    if isinstance(witness, tuple) and all(isinstance(w, VertexSet) for w in witness):
        return {"type": WITNESS_SET_PAIR, "sets": [sorted(g.labels_of(w)) for w in witness]}
    return {"type": type(witness).__name__, "value": repr(witness)}


def verdict_json(g: Dag, predicate: str, verdict: Verdict, timing_ms: float) -> Dict[str, Any]:
    out = {
        "holds": verdict.holds,
        "predicate": predicate,
        "timing_ms": round(timing_ms, 3),
    }
    if not verdict.holds and verdict.witness is not None:
        out["witness"] = witness_json(g, verdict.witness)
    return out


def set_system_json(s: SetSystem, checks: Iterable = ()) -> Dict[str, Any]:
    """The sorted family plus one entry per (name, verdict) in checks"""
    out = {"family": s.to_json(), "system": s.name}
    for name, verdict in checks:
        entry = {"holds": verdict.holds}
        if not verdict.holds and verdict.witness is not None:
            witness = verdict.witness
            if isinstance(witness, VertexSet):
                entry["witness"] = {"type": WITNESS_SUBSET, "vertices": list(s.labels_of(witness))}
            else:
                entry["witness"] = {
                    "type": WITNESS_SET_PAIR,
                    "sets": [list(s.labels_of(w)) for w in witness],
                }
        out[name] = entry
    return out
