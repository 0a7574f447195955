"""Level-1 networks and galled trees"""

import random
from typing import List, Optional

import networkx as nx

from lcadag.lca_dag_core import is_network
from lcadag.lca_helpers import NotANetwork
from lcadag.lca_types import Dag, Verdict, VertexSet


def blocks(g: Dag) -> List[VertexSet]:
    """
    Maximal biconnected pieces of the underlying undirected graph, bridges
    as two vertex blocks and isolated vertices as singletons, sorted
    """
    undirected = g.nx_graph.to_undirected()
    found = [VertexSet(c) for c in nx.biconnected_components(undirected)]
    found += [VertexSet((v,)) for v in g.ids if undirected.degree(v) == 0]
    return sorted(found)


def _require_network(g: Dag, what: str) -> None:
    if not is_network(g):
        raise NotANetwork(f"{what} is defined for networks, this DAG has several roots")


def _block_hybrids(g: Dag, block: VertexSet) -> VertexSet:
    inside = set(block)
    return VertexSet(v for v in block if len([p for p in g.parents[v] if p in inside]) > 1)


def is_level1(g: Dag) -> Verdict:
    """At most one hybrid per block, the witness is the first block with more"""
    _require_network(g, "Level-1")
    for block in blocks(g):
        if len(_block_hybrids(g, block)) > 1:
            return Verdict(False, witness=block, details={"hybrids": _block_hybrids(g, block)})
    return Verdict(True)


def _is_gall(g: Dag, block: VertexSet) -> bool:
    inside = set(block)
    edges = [(u, v) for u, v in g.edges if u in inside and v in inside]
    if len(edges) != len(block):
        return False
    indeg = {v: 0 for v in block}
    outdeg = {v: 0 for v in block}
    for u, v in edges:
        outdeg[u] += 1
        indeg[v] += 1
    sources = [v for v in block if indeg[v] == 0]
    sinks = [v for v in block if outdeg[v] == 0]
    if len(sources) != 1 or len(sinks) != 1:
        return False
    return all(indeg[v] == 1 and outdeg[v] == 1 for v in block if v not in (sources[0], sinks[0]))


def is_galled_tree(g: Dag) -> Verdict:
    _require_network(g, "A galled tree")
    for block in blocks(g):
        if len(block) > 2 and not _is_gall(g, block):
            return Verdict(False, witness=block)
    return Verdict(True)


def random_level1(n: int, seed: Optional[int] = None) -> Dag:
    """
    A random galled tree on v0..v{n-1}: tree growth where, while the size
    allows, a tree edge u->v may be replaced by a gall u->a->h, u->h or
    u->a, u->b, a->h, b->h, followed by h->v
    """
    if n < 1:
        raise ValueError(f"n={n}, a network needs at least one vertex")
    rng = random.Random(seed)
    size = 1
    tree_edges = []
    gall_edges = []

    def fresh() -> int:
        nonlocal size
        size += 1
        return size - 1

    while size < n:
        room = n - size
        choices = ["leaf"]
        if tree_edges and room >= 2:
            choices.append("gall2")
        if tree_edges and room >= 3:
            choices.append("gall4")
        choice = rng.choice(choices)
        if choice == "leaf":
            tree_edges.append((rng.randrange(size), fresh()))
            continue
        u, v = tree_edges.pop(rng.randrange(len(tree_edges)))
        a = fresh()
        if choice == "gall2":
            h = fresh()
            gall_edges += [(u, a), (a, h), (u, h)]
        else:
            b, h = fresh(), fresh()
            gall_edges += [(u, a), (u, b), (a, h), (b, h)]
        tree_edges.append((h, v))

    return Dag([f"v{i}" for i in range(n)], tree_edges + gall_edges)
