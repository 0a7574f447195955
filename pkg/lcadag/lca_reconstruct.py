"""
Recovering a DAG, up to shortcuts, from its set systems: the descendant
system from the clusters of lxt(g), sf(g) from the descendant system, and
sf(g) from the lopped Hasse diagram of the clusters of lxt(g)
"""

from typing import Dict, Iterable, List, Optional

from lcadag import lca_setsys, lca_transform
from lcadag.lca_constants import SYSTEM_DESCENDANTS
from lcadag.lca_dag_core import are_isomorphic
from lcadag.lca_helpers import CycleDetected, InconsistentFamily, MalformedInput
from lcadag.lca_types import Dag, SetSystem, VertexSet


def clusters_star(g: Dag) -> SetSystem:
    """The clusters of lxt(g) without the singletons of the added leaves"""
    h, hosts = lca_transform.lxt_with_hosts(g, fresh_labels=True)
    c = lca_setsys.clusters(h)
    synthetic = set(hosts)
    return SetSystem.from_defining_sets(
        h.labels,
        c.ground,
        ((v, c.member_of(v)) for v in h.ids if v not in synthetic),
        name="clusters*",
    )


def _host_labels(c: SetSystem, synthetic: Iterable[int]) -> Dict[int, str]:
    hosts = {}
    for x in synthetic:
        label = c.universe[x]
        if lca_transform.is_synthetic_label(label):
            hosts[x] = lca_transform.host_label(label)
            continue
        # without the naming convention, the parent is the witness of the
        # smallest member strictly containing {x}
        containing = [m for m in c.members if x in m and len(m) > 1]
        owners = c.witnesses_of(min(containing, key=len)) if containing else VertexSet()
        if not owners:
            raise MalformedInput(
                f"Cannot tell which vertex the added leaf '{label}' hangs from,"
                " name it '<parent>__lx' or pass a set system with witnesses",
                witness=label,
            )
        hosts[x] = c.universe[owners[0]]
    return hosts


def descendants_from_lxt_clusters(
    c: SetSystem, original_leaves: Optional[Iterable[str]] = None
) -> SetSystem:
    """
    Drops the singletons of the added leaves, then renames every added
    leaf to its parent inside each member. The result is the descendant
    system of the graph lxt was taken of
    """
    if original_leaves is not None:
        keep = set(original_leaves)
        synthetic = [x for x in c.ground if c.universe[x] not in keep]
    else:
        known = set(c.universe)
        synthetic = [
            x
            for x in c.ground
            if lca_transform.is_synthetic_label(c.universe[x])
            and lca_transform.host_label(c.universe[x]) in known
        ]
    hosts = _host_labels(c, synthetic)

    family = []  # type: List[List[str]]
    for member in c.members:
        if len(member) == 1 and member[0] in hosts:
            continue
        family.append([hosts.get(x, c.universe[x]) for x in member])
    return lca_setsys.from_family(family, name=SYSTEM_DESCENDANTS)


def rebuild_sf_from_descendants(d: SetSystem) -> Dag:
    """
    Each vertex u owns the smallest member containing it, D(u). Then u->v
    is an edge when v is in D(u) and no other vertex of D(u) has v below it
    """
    vertices = sorted(set().union(*d.members)) if d.members else []
    if not vertices:
        raise InconsistentFamily("The family has no vertices", witness=())
    own = {}  # type: Dict[int, VertexSet]
    for u in vertices:
        containing = [m for m in d.members if u in m]
        smallest = min(containing, key=len)
        if not all(smallest.issubset(m) for m in containing):
            raise InconsistentFamily(
                f"'{d.universe[u]}' has no unique smallest member containing it",
                witness=d.universe[u],
            )
        own[u] = smallest
    if len(set(own.values())) != len(vertices) or len(vertices) != len(d.members):
        raise InconsistentFamily(
            "Vertices and members do not pair up one to one, this is no descendant system",
            witness=d.to_json(),
        )
    for member in d.members:
        if len(member) == 1 and own[member[0]] != member:
            raise InconsistentFamily(
                f"The singleton {d.format(member)} is not the descendant set of its vertex",
                witness=d.labels_of(member),
            )

    index = {u: i for i, u in enumerate(vertices)}
    edges = []
    for u in vertices:
        below = own[u] - (u,)
        for v in below:
            if not any(v in own[w] for w in below if w != v):
                edges.append((index[u], index[v]))
    try:
        return Dag([d.universe[u] for u in vertices], edges)
    except CycleDetected as e:
        raise InconsistentFamily(f"The family describes a cycle: {e}", witness=e.witness)


def verify_lop_hasse_reconstruction(g: Dag) -> bool:
    """sf(g) and lop(hasse(clusters(lxt(g)))) are isomorphic"""
    h, _ = lca_transform.lxt_with_hosts(g, fresh_labels=True)
    rebuilt = lca_transform.lop(lca_transform.hasse(lca_setsys.clusters(h)))
    return are_isomorphic(lca_transform.sf(g), rebuilt)
