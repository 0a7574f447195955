"""
Common ancestors, LCA sets and the recognition of the global lca-property.

Four routes decide the global lca-property independently of each other:

    - pairwise-vertex: every pair of vertices has a unique LCA
    - lxt-leaf-pairs: every pair of leaves of lxt(g) has a unique LCA
    - join-semilattice: every pair has a least upper bound in the
      reachability order, computed on the relation alone
    - descendant-closed: g is a network whose descendant system is closed

They must always agree, has_global_lca checks that they do. Failure
witnesses are deterministic, the smallest failing pair or subset in id
order.
"""

import itertools
import random
from typing import Dict, Iterable, Optional

import numpy

from lcadag import lca_config, lca_setsys, lca_transform
from lcadag.lca_constants import (
    WITNESS_MULTIPLE_ROOTS,
    WITNESS_PAIR,
    WITNESS_SET_PAIR,
    WITNESS_SUBSET,
    WITNESS_VERTEX,
)
from lcadag.lca_dag_core import is_network, leaves, roots
from lcadag.lca_helpers import (
    AmbiguousLca,
    EmptyQuery,
    NoLca,
    NotTreeLeafChild,
    RouteDisagreement,
    check_size,
    logger,
)
from lcadag.lca_types import (
    Dag,
    GlobalLcaReport,
    LcaWitness,
    Poset,
    Route,
    Verdict,
    VertexSet,
)
from lcadag.lca_utils.lca_corpus import separation_candidate


def _query(g: Dag, a: Iterable[int]) -> VertexSet:
    a = VertexSet(a)
    if not a:
        raise EmptyQuery("LCA queries need at least one vertex", witness=())
    return a


def anc(g: Dag, a: Iterable[int]) -> VertexSet:
    a = _query(g, a)
    return VertexSet.from_mask(g.poset.common_up_mask(a))


def lca_set(g: Dag, a: Iterable[int]) -> VertexSet:
    a = _query(g, a)
    poset = g.poset
    return poset.minimal(numpy.flatnonzero(poset.common_up_mask(a)).tolist())


def lca(g: Dag, a: Iterable[int]) -> int:
    a = _query(g, a)
    found = lca_set(g, a)
    if not found:
        raise NoLca(f"{g.format(a)} has no common ancestor", witness=g.labels_of(a))
    if len(found) > 1:
        raise AmbiguousLca(
            f"{g.format(a)} has the LCAs {g.format(found)}", witness=g.labels_of(found)
        )
    return found[0]


def _pair_witness(g: Dag, pair, found: VertexSet, kind: str = WITNESS_PAIR) -> LcaWitness:
    return LcaWitness(kind, query=g.labels_of(pair), lca=g.labels_of(found))


def find_pair_without_unique_lca(g: Dag, vs: Optional[Iterable[int]] = None):
    """(pair, lca_set) of the first pair of vs without a unique LCA, or None"""
    for pair in itertools.combinations(sorted(vs) if vs is not None else g.ids, 2):
        found = lca_set(g, pair)
        if len(found) != 1:
            return pair, found
    return None


def has_global_lca_pairwise(g: Dag) -> GlobalLcaReport:
    failing = find_pair_without_unique_lca(g)
    if failing is None:
        return GlobalLcaReport(True, Route.PAIRWISE_VERTEX)
    return GlobalLcaReport(False, Route.PAIRWISE_VERTEX, _pair_witness(g, *failing))


def has_global_lca_via_lxt(g: Dag) -> GlobalLcaReport:
    h, hosts = lca_transform.lxt_with_hosts(g, fresh_labels=True)
    failing = find_pair_without_unique_lca(h, leaves(h))
    if failing is None:
        return GlobalLcaReport(True, Route.LXT_LEAF_PAIRS)
    leaf_pair, _ = failing
    pair = VertexSet(hosts.get(x, x) for x in leaf_pair)
    return GlobalLcaReport(
        False,
        Route.LXT_LEAF_PAIRS,
        LcaWitness(
            WITNESS_PAIR,
            query=g.labels_of(pair),
            lca=g.labels_of(lca_set(g, pair)),
            sets=(h.labels_of(leaf_pair),),
        ),
    )


def join(p: Poset, u: int, v: int) -> Optional[int]:
    """The least upper bound of u and v, None when there is none"""
    upper = p.leq[u] & p.leq[v]
    for z in numpy.flatnonzero(upper):
        # z is below every upper bound
        if numpy.all(p.leq[z] | ~upper):
            return int(z)
    return None


def is_join_semilattice(p: Poset) -> Verdict:
    for u, v in itertools.combinations(range(p.n), 2):
        if join(p, u, v) is None:
            upper = numpy.flatnonzero(p.leq[u] & p.leq[v]).tolist()
            return Verdict(
                False,
                witness=VertexSet((u, v)),
                details={"minimal_upper_bounds": p.minimal(upper)},
            )
    return Verdict(True)


def has_global_lca_via_join_semilattice(g: Dag) -> GlobalLcaReport:
    verdict = is_join_semilattice(g.poset)
    if verdict:
        return GlobalLcaReport(True, Route.JOIN_SEMILATTICE)
    return GlobalLcaReport(
        False,
        Route.JOIN_SEMILATTICE,
        _pair_witness(g, verdict.witness, verdict.details["minimal_upper_bounds"]),
    )


def has_global_lca_via_descendants(g: Dag) -> GlobalLcaReport:
    if not is_network(g):
        return GlobalLcaReport(
            False,
            Route.DESCENDANT_CLOSED,
            LcaWitness(WITNESS_MULTIPLE_ROOTS, query=g.labels_of(roots(g))),
        )
    d = lca_setsys.descendants(g)
    verdict = lca_setsys.is_closed(d)
    if verdict:
        return GlobalLcaReport(True, Route.DESCENDANT_CLOSED)
    first, second = verdict.witness
    # the intersection is no member, so it cannot have a unique LCA
    query = first & second
    return GlobalLcaReport(
        False,
        Route.DESCENDANT_CLOSED,
        LcaWitness(
            WITNESS_SET_PAIR,
            query=g.labels_of(query),
            lca=g.labels_of(lca_set(g, query)),
            sets=(d.labels_of(first), d.labels_of(second)),
        ),
    )


_ROUTES = {
    Route.PAIRWISE_VERTEX: has_global_lca_pairwise,
    Route.LXT_LEAF_PAIRS: has_global_lca_via_lxt,
    Route.JOIN_SEMILATTICE: has_global_lca_via_join_semilattice,
    Route.DESCENDANT_CLOSED: has_global_lca_via_descendants,
}


def global_lca_reports(g: Dag) -> Dict[Route, GlobalLcaReport]:
    """Every route's report, raises RouteDisagreement unless all verdicts agree"""
    reports = {route: check(g) for route, check in _ROUTES.items()}
    verdicts = {route.value: report.holds for route, report in reports.items()}
    if len(set(verdicts.values())) > 1:
        logger.error(f"Recognition routes disagree: {verdicts}", context=repr(g))
        raise RouteDisagreement(
            f"Recognition routes disagree on {g!r}: {verdicts}", witness=verdicts
        )
    return reports


def has_global_lca(g: Dag, route: Optional[Route] = None) -> GlobalLcaReport:
    """One route's report, or with no route all four, reporting the pairwise one"""
    if route is not None:
        return _ROUTES[route](g)
    return global_lca_reports(g)[Route.PAIRWISE_VERTEX]


def _cluster_masks(g: Dag) -> numpy.ndarray:
    leaf_mask = leaves(g).to_mask(g.n)
    # row v is C(v)
    return g.poset.leq.T & leaf_mask


def _cluster_inclusion(g: Dag) -> numpy.ndarray:
    masks = _cluster_masks(g).astype(numpy.int64)
    # sub[u, v]: C(u) is inside C(v)
    return (masks @ (1 - masks).T) == 0


def satisfies_pcc(g: Dag) -> Verdict:
    """u and v are comparable exactly when C(u) and C(v) are"""
    leq = g.poset.leq
    sub = _cluster_inclusion(g)
    mismatch = (leq | leq.T) != (sub | sub.T)
    failing = numpy.argwhere(numpy.triu(mismatch, 1))
    if len(failing):
        return Verdict(False, witness=VertexSet(failing[0].tolist()), reason="pcc")
    return Verdict(True)


def is_lca_relevant(g: Dag) -> Verdict:
    """PCC holds and the clusters are pairwise distinct"""
    pcc = satisfies_pcc(g)
    if not pcc:
        return pcc
    sub = _cluster_inclusion(g)
    equal = numpy.argwhere(numpy.triu(sub & sub.T, 1))
    if len(equal):
        return Verdict(False, witness=VertexSet(equal[0].tolist()), reason="equal clusters")
    return Verdict(True)


def satisfies_strong_cl(g: Dag) -> Verdict:
    """lca(C(v)) is defined and equals v for every vertex v"""
    masks = _cluster_masks(g)
    for v in g.ids:
        if lca_set(g, VertexSet.from_mask(masks[v])) != VertexSet((v,)):
            return Verdict(False, witness=v)
    return Verdict(True)


def _leaf_subsets(g: Dag, cap: Optional[int]):
    leaf_ids = leaves(g)
    cap = cap if cap is not None else lca_config.get_subset_cap()
    check_size("leaf subset enumeration", 2 ** len(leaf_ids), cap)
    for size in range(1, len(leaf_ids) + 1):
        yield from itertools.combinations(leaf_ids, size)


def has_lca_property_exhaustive(g: Dag, cap: Optional[int] = None) -> Verdict:
    """Every non-empty set of leaves has a unique LCA, by brute force"""
    for subset in _leaf_subsets(g, cap):
        found = lca_set(g, subset)
        if len(found) != 1:
            return Verdict(
                False,
                witness=VertexSet(subset),
                details={"lca": found, "type": WITNESS_SUBSET},
            )
    return Verdict(True)


def has_pairwise_lca_property(g: Dag) -> Verdict:
    """Every pair of leaves has a unique LCA"""
    failing = find_pair_without_unique_lca(g, leaves(g))
    if failing is None:
        return Verdict(True)
    pair, found = failing
    return Verdict(False, witness=VertexSet(pair), details={"lca": found, "type": WITNESS_PAIR})


def is_lca_relevant_exhaustive(g: Dag, cap: Optional[int] = None) -> Verdict:
    """Every vertex is the unique LCA of some set of leaves, by brute force"""
    hit = set()
    for subset in _leaf_subsets(g, cap):
        found = lca_set(g, subset)
        if len(found) == 1:
            hit.add(found[0])
    missing = [v for v in g.ids if v not in hit]
    if missing:
        return Verdict(False, witness=missing[0], details={"type": WITNESS_VERTEX})
    return Verdict(True)


def _clustering_conditions(g: Dag, cap: Optional[int]) -> Dict[str, bool]:
    c = lca_setsys.clusters(g)
    clustering = lca_setsys.is_clustering_system(c)
    return {
        "global_lca": bool(has_global_lca_via_join_semilattice(g)),
        "global_pairwise_lca": bool(has_global_lca_pairwise(g)),
        "lca_property": bool(has_lca_property_exhaustive(g, cap)),
        "pairwise_lca_property": bool(has_pairwise_lca_property(g)),
        "closed_clustering_system": clustering and bool(lca_setsys.is_closed(c)),
        "pre_binary_clustering_system": clustering and bool(lca_setsys.is_pre_binary(c)),
    }


def tree_leaf_child_conditions(g: Dag, cap: Optional[int] = None) -> Dict[str, bool]:
    """
    The six conditions that are equivalent on tree-leaf-child DAGs, evaluated
    side by side. On other DAGs they may differ, so those are refused
    """
    if not lca_transform.is_tree_leaf_child(g):
        bad = next(v for v in g.ids if g.children[v] and not lca_transform.tree_leaf_children(g, v))
        raise NotTreeLeafChild(
            f"'{g.label_of(bad)}' has no leaf child of in-degree one", witness=g.label_of(bad)
        )
    return _clustering_conditions(g, cap)


def lxt_conditions(g: Dag, cap: Optional[int] = None) -> Dict[str, bool]:
    """g's global lca-property next to the six conditions on lxt(g), all equivalent"""
    conditions = {"input_global_lca": bool(has_global_lca_pairwise(g))}
    h, _ = lca_transform.lxt_with_hosts(g, fresh_labels=True)
    conditions.update(
        ("lxt_" + name, value) for name, value in _clustering_conditions(h, cap).items()
    )
    return conditions


def find_pairwise_not_lca(seed: int = 0, budget: int = 100_000) -> Optional[Dag]:
    """
    The first sampled layered network where every pair of leaves has a
    unique LCA but some larger set of leaves does not, None if the budget
    runs out
    """
    rng = random.Random(seed)
    for tried in range(1, budget + 1):
        g = separation_candidate(rng)
        if has_pairwise_lca_property(g) and not has_lca_property_exhaustive(g):
            logger.info(
                f"Separating network found after {tried} candidates", context=f"seed {seed}"
            )
            return g
    logger.warn(f"No separating network in {budget} candidates", context=f"seed {seed}")
    return None
