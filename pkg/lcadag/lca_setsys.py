"""
Set systems read off a DAG (clusters, descendants, ancestors,
intermediaries) and the predicates on them.

Internally the scans work on int bitmasks, bit i standing for vertex i.
"""

import itertools
import math
from typing import Iterable, List, Optional, Sequence

from lcadag import lca_config
from lcadag.lca_constants import (
    SYSTEM_ANCESTORS,
    SYSTEM_CLUSTERS,
    SYSTEM_DESCENDANTS,
    SYSTEM_INTERMEDIARIES,
)
from lcadag.lca_dag_core import leaves
from lcadag.lca_helpers import EmptyQuery, NoSuperset, check_size
from lcadag.lca_types import Dag, SetSystem, Verdict, VertexSet


def _to_mask(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def _from_mask(mask: int) -> VertexSet:
    return VertexSet(i for i in range(mask.bit_length()) if mask >> i & 1)


def from_family(
    family: Iterable[Iterable[str]],
    ground: Optional[Iterable[str]] = None,
    name: str = "",
) -> SetSystem:
    """
    A SetSystem from label sets. The universe is the sorted union of the
    ground labels and all member labels
    """
    family = [tuple(m) for m in family]
    ground_labels = set(ground) if ground is not None else set()
    universe = sorted(ground_labels.union(*map(set, family)) if family else ground_labels)
    index = {label: i for i, label in enumerate(universe)}
    ground_ids = (
        [index[l] for l in ground_labels] if ground is not None else range(len(universe))
    )
    return SetSystem(
        universe, ground_ids, ([index[l] for l in m] for m in family), name=name
    )


def clusters(g: Dag) -> SetSystem:
    leq = g.poset.leq
    leaf_ids = leaves(g)
    leaf_mask = leaf_ids.to_mask(g.n)
    return SetSystem.from_defining_sets(
        g.labels,
        leaf_ids,
        ((v, VertexSet.from_mask(leq[:, v] & leaf_mask)) for v in g.ids),
        name=SYSTEM_CLUSTERS,
    )


def descendants(g: Dag) -> SetSystem:
    leq = g.poset.leq
    return SetSystem.from_defining_sets(
        g.labels,
        g.ids,
        ((v, VertexSet.from_mask(leq[:, v])) for v in g.ids),
        name=SYSTEM_DESCENDANTS,
    )


def ancestors(g: Dag) -> SetSystem:
    leq = g.poset.leq
    return SetSystem.from_defining_sets(
        g.labels,
        g.ids,
        ((v, VertexSet.from_mask(leq[v])) for v in g.ids),
        name=SYSTEM_ANCESTORS,
    )


def intermediaries(g: Dag) -> SetSystem:
    """B(u,v) = D(u) & ANC(v) for all ordered pairs, the empty set included"""
    leq = g.poset.leq
    members = []  # type: List[VertexSet]
    seen = {}
    for u, v in itertools.product(g.ids, repeat=2):
        member = VertexSet.from_mask(leq[:, u] & leq[v])
        if member not in seen:
            seen[member] = len(members)
            members.append(member)
    witness = {v: seen[VertexSet((v,))] for v in g.ids}
    return SetSystem(g.labels, g.ids, members, witness, name=SYSTEM_INTERMEDIARIES)


def is_closed(s: SetSystem) -> Verdict:
    """
    Every non-empty intersection of two members is a member. The witness is
    the first failing pair in member order
    """
    masks = [_to_mask(m) for m in s.members]
    present = set(masks)
    for i, j in itertools.combinations(range(len(masks)), 2):
        both = masks[i] & masks[j]
        if both and both not in present:
            return Verdict(
                False,
                witness=(s.members[i], s.members[j]),
                reason=f"{s.format(s.members[i])} & {s.format(s.members[j])}"
                f" = {s.format(_from_mask(both))} is not a member",
            )
    return Verdict(True)


def is_grounded(s: SetSystem) -> bool:
    if VertexSet() in s:
        return False
    return all(VertexSet((x,)) in s for x in s.ground)


def is_rooted(s: SetSystem) -> bool:
    return s.ground in s


def is_clustering_system(s: SetSystem) -> bool:
    return is_grounded(s) and is_rooted(s)


def _closure_mask(masks: Sequence[int], a: int) -> Optional[int]:
    result = None
    for m in masks:
        if m & a == a:
            result = m if result is None else result & m
    return result


def closure(s: SetSystem, a: Iterable[int]) -> VertexSet:
    """Intersection of all members containing a, not necessarily a member"""
    a = VertexSet(a)
    if not a:
        raise EmptyQuery("The closure of the empty set is not defined", witness=())
    result = _closure_mask([_to_mask(m) for m in s.members], _to_mask(a))
    if result is None:
        raise NoSuperset(
            f"No member of {s.name or 'the set system'} contains {s.format(a)}",
            witness=s.labels_of(a),
        )
    return _from_mask(result)


def is_pre_binary(s: SetSystem) -> Verdict:
    """Every pair of ground elements has a unique inclusion-minimal member containing it"""
    masks = [_to_mask(m) for m in s.members]
    present = set(masks)
    for x, y in itertools.combinations(s.ground, 2):
        a = 1 << x | 1 << y
        cl = _closure_mask(masks, a)
        if cl is None or cl not in present:
            return Verdict(False, witness=VertexSet((x, y)), reason=f"at {s.format((x, y))}")
    return Verdict(True)


def is_pre_k_ary(s: SetSystem, k: int) -> Verdict:
    """
    For every non-empty A of at most k ground elements, cl(A) exists and
    is a member. Subsets are tried by size, then lexicographically
    """
    if not 1 <= k <= max(len(s.ground), 1):
        raise ValueError(f"k={k} must lie between 1 and the ground size {len(s.ground)}")
    total = sum(math.comb(len(s.ground), i) for i in range(1, k + 1))
    check_size("pre-k-ary subset enumeration", total, lca_config.get_subset_cap())
    masks = [_to_mask(m) for m in s.members]
    present = set(masks)
    for size in range(1, k + 1):
        for subset in itertools.combinations(s.ground, size):
            cl = _closure_mask(masks, _to_mask(subset))
            if cl is None or cl not in present:
                return Verdict(
                    False, witness=VertexSet(subset), reason=f"at {s.format(subset)}"
                )
    return Verdict(True)
