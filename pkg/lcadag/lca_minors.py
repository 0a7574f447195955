"""
Subdivision certificates inside DAGs: vertex-disjoint directed paths,
strict K2,2 subdivisions and the X / X' hourglasses.

Disjoint paths are found with a pebble game: one pebble per path walks
from its source to its target, always moving the unfinished pebble that
sits lowest in topological order onto a free successor. A vertex a
pebble leaves behind is topologically before every other pebble, so no
path can come back to it, which makes "no two pebbles on one vertex"
equivalent to vertex-disjointness. The states are searched depth first.
"""

import itertools
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy

from lcadag import lca_config
from lcadag.lca_analysis import lca_set
from lcadag.lca_constants import MINOR_DEFAULT_LIMIT
from lcadag.lca_dag_core import is_network
from lcadag.lca_helpers import NotANetwork, check_size
from lcadag.lca_types import Dag, K22Subdivision, Verdict, VertexSet, XSubdivision

Node = Hashable


def _pebble_game(
    starts: Sequence[Node],
    targets: Sequence[Node],
    successors: Callable[[Node], Iterable[Node]],
    key: Callable[[Node], Tuple],
    can_reach: Callable[[Node, Node], bool],
) -> Optional[List[List[Node]]]:
    k = len(starts)
    start = tuple(starts)
    if len(set(start)) != k or len(set(targets)) != k:
        return None
    if not all(can_reach(s, t) for s, t in zip(starts, targets)):
        return None

    came_from = {start: None}  # type: Dict[Tuple, Optional[Tuple[Tuple, int]]]
    stack = [start]
    goal = tuple(targets)
    found = None
    while stack:
        state = stack.pop()
        if state == goal:
            found = state
            break
        moving = min(
            (i for i in range(k) if state[i] != targets[i]), key=lambda i: key(state[i])
        )
        occupied = set(state)
        for nxt in successors(state[moving]):
            if nxt in occupied or not can_reach(nxt, targets[moving]):
                continue
            new_state = state[:moving] + (nxt,) + state[moving + 1 :]
            if new_state not in came_from:
                came_from[new_state] = (state, moving)
                stack.append(new_state)
    if found is None:
        return None

    paths = [[s] for s in goal]
    state = found
    while came_from[state] is not None:
        prev, moved = came_from[state]
        paths[moved].append(prev[moved])
        state = prev
    return [list(reversed(p)) for p in paths]


def disjoint_paths(g: Dag, pairs: Sequence[Tuple[int, int]]) -> Optional[List[Tuple[int, ...]]]:
    """
    Pairwise vertex-disjoint directed paths s->t for every (s, t) in pairs,
    endpoints included, or None
    """
    leq = g.poset.leq
    index = g.topological_index
    paths = _pebble_game(
        [s for s, _ in pairs],
        [t for _, t in pairs],
        lambda v: g.children[v],
        lambda v: (index[v],),
        lambda v, t: bool(leq[t, v]),
    )
    return None if paths is None else [tuple(p) for p in paths]


def two_disjoint_paths(g: Dag, s1: int, t1: int, s2: int, t2: int):
    return disjoint_paths(g, [(s1, t1), (s2, t2)])


def _endpoints_ok(g: Dag, roots: Tuple[int, int], sinks: Tuple[int, int]) -> bool:
    p = g.poset
    (r, r2), (l, l2) = roots, sinks
    return (
        p.incomparable(r, r2)
        and p.incomparable(l, l2)
        and all(p.le(s, t) for s in sinks for t in roots)
    )


def k22_between(g: Dag, roots: Tuple[int, int], sinks: Tuple[int, int]) -> Optional[K22Subdivision]:
    """
    A strict K2,2 subdivision with exactly these roots and sinks.

    Every endpoint is split into two copies, one per path it ends, which
    turns the pattern into four vertex-disjoint paths
    r.a->l.a, r.b->l2.a, r2.a->l.b, r2.b->l2.b
    """
    if not _endpoints_ok(g, roots, sinks):
        return None
    (r, r2), (l, l2) = roots, sinks
    root_ids, sink_ids = {r, r2}, {l, l2}
    leq = g.poset.leq
    index = g.topological_index

    def original(node) -> int:
        return node[0] if isinstance(node, tuple) else node

    def successors(node):
        u = original(node)
        if u in sink_ids:
            return
        for v in g.children[u]:
            if v in root_ids:
                continue
            if v in sink_ids:
                yield (v, 0)
                yield (v, 1)
            else:
                yield v

    def key(node):
        return (index[original(node)], node[1] if isinstance(node, tuple) else 0)

    def can_reach(node, target) -> bool:
        if isinstance(node, tuple) and original(node) in sink_ids:
            return node == target
        return bool(leq[original(target), original(node)])

    paths = _pebble_game(
        [(r, 0), (r, 1), (r2, 0), (r2, 1)],
        [(l, 0), (l2, 0), (l, 1), (l2, 1)],
        successors,
        key,
        can_reach,
    )
    if paths is None:
        return None
    return K22Subdivision(
        roots=(r, r2),
        sinks=(l, l2),
        paths=tuple(tuple(original(n) for n in p) for p in paths),
    )


def _candidate_quadruples(g: Dag):
    p = g.poset
    leq = p.leq
    for r, r2 in itertools.combinations(g.ids, 2):
        if p.comparable(r, r2):
            continue
        below = numpy.flatnonzero(leq[:, r] & leq[:, r2]).tolist()
        for l, l2 in itertools.combinations(below, 2):
            if p.incomparable(l, l2):
                yield (r, r2), (l, l2)


def find_strict_k22(g: Dag, limit: Optional[int] = MINOR_DEFAULT_LIMIT) -> List[K22Subdivision]:
    """Strict K2,2 subdivisions, one per endpoint quadruple, in endpoint id order"""
    check_size("strict K2,2 search", g.n, lca_config.get_max_vertices())
    found = []
    for roots, sinks in _candidate_quadruples(g):
        if limit is not None and len(found) >= limit:
            break
        subdivision = k22_between(g, roots, sinks)
        if subdivision is not None:
            found.append(subdivision)
    return found


def _centers(g: Dag, roots, sinks) -> VertexSet:
    leq = g.poset.leq
    (r, r2), (l, l2) = roots, sinks
    mask = leq[:, r] & leq[:, r2] & leq[l] & leq[l2]
    return VertexSet.from_mask(mask) - (set(roots) | set(sinks))


def _path(g: Dag, s: int, t: int) -> Tuple[int, ...]:
    return tuple(nx.shortest_path(g.nx_graph, s, t))


def has_x_or_xprime(g: Dag, roots: Tuple[int, int], sinks: Tuple[int, int]) -> Verdict:
    """
    An X or X' subdivision with these roots and sinks exists exactly when
    some vertex c, not an endpoint, lies below both roots and above both
    sinks. The certificate joins r->c and r2->c at their first common
    vertex (the top) and c->l and c->l2 at their last one (the bottom)
    """
    centers = _centers(g, roots, sinks)
    if not centers:
        return Verdict(False)
    c = centers[0]
    (r, r2), (l, l2) = roots, sinks
    p_rc, p_r2c = _path(g, r, c), _path(g, r2, c)
    on_r2 = set(p_r2c)
    top = next(v for v in p_rc if v in on_r2)
    p_cl, p_cl2 = _path(g, c, l), _path(g, c, l2)
    on_l2 = set(p_cl2)
    bottom = next(v for v in reversed(p_cl) if v in on_l2)
    middle = p_rc[p_rc.index(top) :] + p_cl[1 : p_cl.index(bottom) + 1]
    return Verdict(
        True,
        witness=XSubdivision(
            roots=(r, r2),
            sinks=(l, l2),
            top=top,
            bottom=bottom,
            upper=(p_rc[: p_rc.index(top) + 1], p_r2c[: p_r2c.index(top) + 1]),
            middle=middle,
            lower=(p_cl[p_cl.index(bottom) :], p_cl2[p_cl2.index(bottom) :]),
        ),
    )


def strict_k22_from_lca_pair(g: Dag, u: int, v: int) -> Optional[K22Subdivision]:
    """
    The subdivision a pair with two LCAs r, r2 always has: l is a highest
    common descendant of r and r2 above u, l2 one above v. Any paths from
    the roots to these sinks form the subdivision
    """
    found = lca_set(g, (u, v))
    if len(found) < 2:
        return None
    r, r2 = found[0], found[1]
    p = g.poset
    leq = p.leq
    common = leq[:, r] & leq[:, r2]
    l = p.maximal(numpy.flatnonzero(common & leq[u]).tolist())[0]
    l2 = p.maximal(numpy.flatnonzero(common & leq[v]).tolist())[0]
    return K22Subdivision(
        roots=(r, r2),
        sinks=(l, l2),
        paths=(_path(g, r, l), _path(g, r, l2), _path(g, r2, l), _path(g, r2, l2)),
    )


def verify_minor_theorem(g: Dag, use_lca_shortcut: bool = False) -> Verdict:
    """
    True when every strict K2,2 subdivision of the network g comes with an
    X or X' subdivision on the same roots and sinks. The witness of a
    failure is a K2,2 subdivision without one.

    By default only paths are searched, no LCA is computed. With
    use_lca_shortcut, pairs with several LCAs are turned into subdivisions
    directly before the endpoint quadruples are searched
    """
    if not is_network(g):
        raise NotANetwork("The minor theorem is stated for networks, this DAG has several roots")
    check_size("minor theorem check", g.n, lca_config.get_max_vertices())
    if use_lca_shortcut:
        for u, v in itertools.combinations(g.ids, 2):
            subdivision = strict_k22_from_lca_pair(g, u, v)
            if subdivision is None:
                continue
            if not has_x_or_xprime(g, subdivision.roots, subdivision.sinks):
                return Verdict(False, witness=subdivision)
    for roots, sinks in _candidate_quadruples(g):
        if _centers(g, roots, sinks):
            continue
        subdivision = k22_between(g, roots, sinks)
        if subdivision is not None:
            return Verdict(False, witness=subdivision)
    return Verdict(True)
