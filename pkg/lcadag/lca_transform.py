"""
Graph transformations: shortcut removal (sf), leaf extension (lxt),
lopping (lop), Hasse diagrams and the regularity test
"""

from typing import Dict, FrozenSet, List, Set, Tuple, Union

import numpy

from lcadag import lca_setsys
from lcadag.lca_constants import (
    LOP_POLICIES,
    LOP_POLICY_HIGHEST_ID,
    LOP_POLICY_LOWEST_ID,
    LOP_POLICY_SYNTHETIC_FIRST,
    SYNTHETIC_LEAF_SUFFIX,
)
from lcadag.lca_dag_core import inner
from lcadag.lca_helpers import LabelCollision, NotTreeLeafChild, format_labels
from lcadag.lca_types import Dag, Poset, SetSystem, VertexSet

Edge = Tuple[int, int]


def shortcuts(g: Dag) -> FrozenSet[Edge]:
    """Edges (u,w) with some other child v of u above w"""
    leq = g.poset.leq
    found = set()
    for u, w in g.edges:
        for v in g.children[u]:
            if v != w and leq[w, v]:
                found.add((u, w))
                break
    return frozenset(found)


def sf(g: Dag) -> Dag:
    cut = shortcuts(g)
    if not cut:
        return g
    return Dag(g.labels, g.edges - cut)


def synthetic_label(label: str) -> str:
    return label + SYNTHETIC_LEAF_SUFFIX


def is_synthetic_label(label: str) -> bool:
    return label.endswith(SYNTHETIC_LEAF_SUFFIX) and len(label) > len(
        SYNTHETIC_LEAF_SUFFIX
    )


def host_label(label: str) -> str:
    return label[: -len(SYNTHETIC_LEAF_SUFFIX)]


def _fresh_label(host: str, taken: Set[str]) -> str:
    count = 1
    while synthetic_label(f"{host}{count}") in taken:
        count += 1
    return synthetic_label(f"{host}{count}")


def lxt_with_hosts(g: Dag, fresh_labels: bool = False) -> Tuple[Dag, Dict[int, int]]:
    """
    lxt(g) and the map from each new leaf's id to its parent's id.

    A new leaf is named '<parent>__lx'. When that name is already a vertex
    LabelCollision is raised, unless fresh_labels is set, in which case a
    counter goes in front of the suffix until the name is unused
    """
    labels = list(g.labels)
    taken = set(labels)
    edges = list(g.edges)
    hosts = {}
    for v in inner(g):
        label = synthetic_label(g.label_of(v))
        if label in taken:
            if not fresh_labels:
                raise LabelCollision(
                    f"'{label}' is already a vertex, rename it before extending the graph",
                    witness=label,
                )
            label = _fresh_label(g.label_of(v), taken)
        taken.add(label)
        hosts[len(labels)] = v
        edges.append((v, len(labels)))
        labels.append(label)
    return Dag(labels, edges), hosts


def lxt(g: Dag) -> Dag:
    return lxt_with_hosts(g)[0]


def tree_leaf_children(g: Dag, v: int) -> VertexSet:
    return VertexSet(c for c in g.children[v] if not g.children[c] and g.in_degree(c) == 1)


def is_tree_leaf_child(g: Dag) -> bool:
    return all(tree_leaf_children(g, v) for v in inner(g))


def _pick_leaf(g: Dag, v: int, candidates: VertexSet, policy: str) -> int:
    if policy == LOP_POLICY_SYNTHETIC_FIRST:
        own = synthetic_label(g.label_of(v))
        for c in candidates:
            if g.label_of(c) == own:
                return c
        synthetic = [c for c in candidates if is_synthetic_label(g.label_of(c))]
        return synthetic[0] if synthetic else candidates[0]
    elif policy == LOP_POLICY_LOWEST_ID:
        return candidates[0]
    elif policy == LOP_POLICY_HIGHEST_ID:
        return candidates[-1]
    raise ValueError(f"Unknown lop policy '{policy}', use one of {', '.join(LOP_POLICIES)}")


def lop(g: Dag, policy: str = LOP_POLICY_SYNTHETIC_FIRST) -> Dag:
    if policy not in LOP_POLICIES:
        raise ValueError(f"Unknown lop policy '{policy}', use one of {', '.join(LOP_POLICIES)}")
    removed = set()
    for v in inner(g):
        candidates = tree_leaf_children(g, v)
        if not candidates:
            raise NotTreeLeafChild(
                f"'{g.label_of(v)}' has no leaf child of in-degree one, the graph"
                " is not tree-leaf-child",
                witness=g.label_of(v),
            )
        removed.add(_pick_leaf(g, v, candidates, policy))
    keep = [v for v in g.ids if v not in removed]
    new_id = {v: i for i, v in enumerate(keep)}
    return Dag(
        [g.labels[v] for v in keep],
        ((new_id[a], new_id[b]) for a, b in g.edges if b not in removed),
    )


def _cover_edges(below: numpy.ndarray) -> List[Edge]:
    """
    below[b, a] says b is strictly below a. Returns the covering pairs
    (a, b) with nothing strictly between
    """
    as_int = below.astype(numpy.int64)
    between = (as_int @ as_int) > 0
    cover = below & ~between
    return [(int(a), int(b)) for b, a in zip(*numpy.nonzero(cover))]


def _strict_inclusion(members, n: int) -> numpy.ndarray:
    masks = numpy.array([m.to_mask(n) for m in members], dtype=numpy.int64).reshape(
        len(members), n
    )
    # outside[j, i]: how many elements of member j are missing from member i
    outside = masks @ (1 - masks).T
    below = outside == 0
    numpy.fill_diagonal(below, False)
    return below


def hasse_edges(s: SetSystem) -> List[Edge]:
    """Covering pairs (i, j) of member indices, member j strictly inside member i"""
    if not s.members:
        return []
    return _cover_edges(_strict_inclusion(s.members, len(s.universe)))


def _member_label(s: SetSystem, i: int) -> str:
    member = s.members[i]
    owners = s.witnesses_of(member)
    if owners:
        return s.universe[owners[0]]
    return format_labels(s.labels_of(member))


def hasse(q: Union[SetSystem, Poset]) -> Dag:
    """
    The Hasse diagram of a set system under inclusion or of a poset.
    Members are named after their lowest id witness vertex, members without
    one after their contents
    """
    if isinstance(q, Poset):
        below = q.leq & ~numpy.eye(q.n, dtype=bool)
        labels = [q.label_of(v) for v in range(q.n)]
        return Dag(labels, _cover_edges(below))
    labels = [_member_label(q, i) for i in range(len(q.members))]
    return Dag(labels, hasse_edges(q))


def hasse_clusters(g: Dag) -> Dag:
    return hasse(lca_setsys.clusters(g))


def hasse_descendants(g: Dag) -> Dag:
    return hasse(lca_setsys.descendants(g))


def is_regular(g: Dag) -> bool:
    """
    v -> C(v) is a bijection onto the clusters that maps the edges of g
    exactly onto the Hasse diagram of the clustering system
    """
    c = lca_setsys.clusters(g)
    if len(c.members) != g.n:
        return False
    phi = c.witness
    image = {(phi[u], phi[v]) for u, v in g.edges}
    return image == set(hasse_edges(c))
