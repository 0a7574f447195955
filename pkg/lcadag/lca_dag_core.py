"""
Construction, reachability and the small structural queries on DAGs that
every other module builds on
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from lcadag import lca_config
from lcadag.lca_helpers import DuplicateLabel, LastVertex, check_size
from lcadag.lca_types import Dag, Poset, VertexSet
from lcadag.lca_types.lca_dag import check_label


def build_dag(
    edge_list: Iterable[Tuple[str, str]], isolated: Sequence[str] = ()
) -> Dag:
    """
    Ids follow first appearance in edge_list, then the isolated labels in
    their given order. An isolated label may not appear twice nor also
    in an edge
    """
    ids = {}  # type: Dict[str, int]
    edges = []  # type: List[Tuple[int, int]]
    for parent, child in edge_list:
        for label in (parent, child):
            if label not in ids:
                check_label(label)
                ids[label] = len(ids)
        edges.append((ids[parent], ids[child]))

    for label in isolated:
        if label in ids:
            raise DuplicateLabel(
                f"Isolated vertex '{label}' is already a vertex of the graph",
                witness=label,
            )
        check_label(label)
        ids[label] = len(ids)

    labels = [""] * len(ids)
    for label, i in ids.items():
        labels[i] = label
    return Dag(labels, edges)


def reachability(g: Dag) -> Poset:
    return g.poset


def leaves(g: Dag) -> VertexSet:
    return VertexSet(v for v in g.ids if not g.children[v])


def roots(g: Dag) -> VertexSet:
    return VertexSet(v for v in g.ids if not g.parents[v])


def inner(g: Dag) -> VertexSet:
    return VertexSet(v for v in g.ids if g.children[v])


def hybrids(g: Dag) -> VertexSet:
    return VertexSet(v for v in g.ids if len(g.parents[v]) > 1)


def is_network(g: Dag) -> bool:
    return len(roots(g)) == 1


def is_tree(g: Dag) -> bool:
    return is_network(g) and not hybrids(g)


def reverse(g: Dag) -> Dag:
    return Dag(g.labels, ((v, u) for u, v in g.edges))


def remove_vertex(g: Dag, v: int) -> Dag:
    if g.n == 1:
        raise LastVertex(
            f"'{g.label_of(v)}' is the only vertex, a DAG cannot be empty",
            witness=g.label_of(v),
        )
    keep = [u for u in g.ids if u != v]
    new_id = {u: i for i, u in enumerate(keep)}
    return Dag(
        [g.labels[u] for u in keep],
        ((new_id[a], new_id[b]) for a, b in g.edges if v not in (a, b)),
    )


def _profiled_graph(g: Dag) -> nx.DiGraph:
    level = [0] * g.n
    for v in g.topological_order:
        for c in g.children[v]:
            level[c] = max(level[c], level[v] + 1)
    below = g.poset.leq.sum(axis=0)
    graph = nx.DiGraph()
    for v in g.ids:
        profile = (g.in_degree(v), g.out_degree(v), level[v], int(below[v]))
        graph.add_node(v, profile=profile)
    graph.add_edges_from(g.edges)
    return graph


def isomorphism(g: Dag, h: Dag) -> Optional[Dict[str, str]]:
    """
    An edge preserving bijection from g onto h as a label map, or None.
    Vertices are only matched when their in/out degree, level and
    descendant count agree
    """
    cap = lca_config.get_max_vertices()
    check_size("isomorphism test", max(g.n, h.n), cap)
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    if sorted(map(len, g.parents)) != sorted(map(len, h.parents)):
        return None
    matcher = DiGraphMatcher(
        _profiled_graph(g),
        _profiled_graph(h),
        node_match=lambda a, b: a["profile"] == b["profile"],
    )
    for mapping in matcher.isomorphisms_iter():
        return {g.label_of(u): h.label_of(v) for u, v in mapping.items()}
    return None


def are_isomorphic(g: Dag, h: Dag) -> bool:
    return isomorphism(g, h) is not None
