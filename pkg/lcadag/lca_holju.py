"""
Leaf-attachment construction of global lca-networks.

A graph is built from a single vertex by adding one leaf at a time, the
new leaf's parent set W must satisfy the unique-minimal rule (O*):
for every old vertex v, the union over w in W of LCA({w, v}) has exactly
one minimal element. Graphs built this way are exactly the global
lca-networks, so deconstruct doubles as a recognizer.
"""

import random
from typing import Iterable, List, Optional, Tuple

from lcadag.lca_analysis import has_global_lca_pairwise, lca_set
from lcadag.lca_constants import (
    GENERATOR_CONTINUE_PROBABILITY,
    GENERATOR_MAX_PARENTS,
    GENERATOR_RETRY_BUDGET,
    TRACE_DEFAULT_ORIGIN,
)
from lcadag.lca_helpers import (
    EmptyQuery,
    LabelCollision,
    MalformedInput,
    NotGlobalLca,
    NotHolju,
    OStarViolated,
    format_labels,
    logger,
)
from lcadag.lca_types import ConstructionTrace, Dag, TraceStep, Verdict, VertexSet, k1
from lcadag.lca_types.lca_dag import check_label

EXTEND_CHECKED = "checked"
EXTEND_UNCHECKED = "unchecked"


def l_set(g: Dag, w: Iterable[int], v: int) -> VertexSet:
    w = VertexSet(w)
    if not w:
        raise EmptyQuery("The parent set W must not be empty", witness=())
    result = VertexSet()
    for u in w:
        result = result | lca_set(g, (u, v))
    return result


def check_o_star(g: Dag, w: Iterable[int], validate: bool = False) -> Verdict:
    """The witness of a failure is the first vertex v whose l_set has several minimal elements"""
    w = VertexSet(w)
    if validate and not has_global_lca_pairwise(g):
        raise NotGlobalLca(
            "(O*) is only meaningful on graphs with the global lca-property", witness=repr(g)
        )
    poset = g.poset
    for v in g.ids:
        minimal = poset.minimal(l_set(g, w, v))
        if len(minimal) != 1:
            return Verdict(False, witness=v, details={"minimal": minimal})
    return Verdict(True)


def extend(g: Dag, w: Iterable[int], label: str, mode: str = EXTEND_CHECKED) -> Dag:
    w = VertexSet(w)
    if not w:
        raise EmptyQuery("The parent set W must not be empty", witness=())
    check_label(label)
    if g.has_label(label):
        raise LabelCollision(f"'{label}' is already a vertex, pick a fresh label", witness=label)
    if mode == EXTEND_CHECKED:
        verdict = check_o_star(g, w)
        if not verdict:
            v = verdict.witness
            raise OStarViolated(
                f"W={g.format(w)} breaks (O*) at '{g.label_of(v)}', its LCAs with W have"
                f" the minimal elements {g.format(verdict.details['minimal'])}",
                witness=g.label_of(v),
            )
    elif mode != EXTEND_UNCHECKED:
        raise ValueError(f"Unknown extend mode '{mode}'")
    x = g.n
    return Dag(g.labels + (label,), list(g.edges) + [(u, x) for u in w])


def replay(trace: ConstructionTrace, mode: str = EXTEND_CHECKED) -> Dag:
    g = k1(trace.origin)
    for step_no, step in enumerate(trace.steps, start=1):
        unknown = [p for p in step.parents if not g.has_label(p)]
        if unknown or not step.parents:
            raise MalformedInput(
                f"Step {step_no}: leaf '{step.leaf}' has the unknown parents"
                f" {format_labels(unknown)}, parents must be added first",
                witness=step.leaf,
            )
        try:
            g = extend(g, g.ids_of(step.parents), step.leaf, mode)
        except OStarViolated as e:
            raise OStarViolated(f"Step {step_no}: {e}", witness=e.witness, step=step_no)
    return g


def deconstruct(g: Dag) -> ConstructionTrace:
    """
    Peels leaves off in reverse topological order and checks that putting
    them back satisfies (O*) each time. Raises NotHolju naming the size of
    the smallest prefix that lacks the global lca-property
    """
    order = g.topological_order
    steps = []  # type: List[TraceStep]
    for size, x in enumerate(order[1:], start=2):
        if not g.parents[x]:
            raise NotHolju(
                f"'{g.label_of(x)}' is a second root, a global lca-network has one",
                witness=(g.label_of(order[0]), g.label_of(x)),
                prefix_size=size,
                reason="multiple roots",
            )
        steps.append(TraceStep(g.label_of(x), g.labels_of(g.parents[x])))

    built = k1(g.label_of(order[0]))
    for size, step in enumerate(steps, start=2):
        w = built.ids_of(step.parents)
        verdict = check_o_star(built, w)
        if not verdict:
            v = built.label_of(verdict.witness)
            raise NotHolju(
                f"Adding '{step.leaf}' below {format_labels(step.parents)} breaks (O*) at '{v}'",
                witness=(step.leaf, step.parents, v),
                prefix_size=size,
                reason="(O*) violated",
            )
        built = extend(built, w, step.leaf, EXTEND_UNCHECKED)
    return ConstructionTrace(built.label_of(0), tuple(steps))


def _sample_parent_count(rng: random.Random, max_parents: int) -> int:
    count = 1
    while count < max_parents and rng.random() < GENERATOR_CONTINUE_PROBABILITY:
        count += 1
    return count


def random_global_lca(
    n: int,
    seed: Optional[int] = None,
    max_parents: int = GENERATOR_MAX_PARENTS,
    retry_budget: int = GENERATOR_RETRY_BUDGET,
) -> Tuple[Dag, ConstructionTrace]:
    """
    A random global lca-network on v0..v{n-1}, deterministic in all
    arguments. Each new leaf samples W until (O*) holds, once the retry
    budget is spent a single random parent is used
    """
    if n < 1:
        raise ValueError(f"n={n}, a network needs at least one vertex")
    rng = random.Random(seed)
    g = k1(TRACE_DEFAULT_ORIGIN)
    steps = []  # type: List[TraceStep]
    for i in range(1, n):
        w = None
        for _ in range(retry_budget):
            size = min(_sample_parent_count(rng, max_parents), g.n)
            candidate = VertexSet(rng.sample(range(g.n), size))
            if check_o_star(g, candidate):
                w = candidate
                break
        if w is None:
            w = VertexSet((rng.randrange(g.n),))
            logger.warn(
                f"v{i}: no W passed (O*) in {retry_budget} tries, using the single parent"
                f" {g.label_of(w[0])}",
                context=f"seed {seed}",
            )
        label = f"v{i}"
        g = extend(g, w, label, EXTEND_UNCHECKED)
        steps.append(TraceStep(label, g.labels_of(w)))
    return g, ConstructionTrace(TRACE_DEFAULT_ORIGIN, tuple(steps))
