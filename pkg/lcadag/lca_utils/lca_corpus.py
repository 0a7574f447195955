"""
Seeded random graphs for cross-validation: plain DAGs, networks and the
small layered networks the pairwise-vs-full lca-property search samples.
Every generator is deterministic in its arguments.
"""

import random
from typing import Iterator, Optional

from lcadag.lca_constants import RANDOM_DAG_EDGE_PROBABILITY
from lcadag.lca_types import Dag


def random_dag(n: int, seed: Optional[int] = None, p: float = RANDOM_DAG_EDGE_PROBABILITY) -> Dag:
    """Each edge i->j with i<j is present with probability p"""
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Dag([f"v{i}" for i in range(n)], edges)


def random_network(
    n: int, seed: Optional[int] = None, p: float = RANDOM_DAG_EDGE_PROBABILITY
) -> Dag:
    """random_dag where every vertex but v0 that lacks a parent gets a random earlier one"""
    rng = random.Random(seed)
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    has_parent = {j for _, j in edges}
    for j in range(1, n):
        if j not in has_parent:
            edges.add((rng.randrange(j), j))
    return Dag([f"v{i}" for i in range(n)], sorted(edges))


def seeded_dags(count: int, max_n: int, seed: int = 0, min_n: int = 1) -> Iterator[Dag]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_dag(rng.randint(min_n, max_n), rng.getrandbits(32), rng.uniform(0.15, 0.5))


def seeded_networks(count: int, max_n: int, seed: int = 0, min_n: int = 1) -> Iterator[Dag]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_network(
            rng.randint(min_n, max_n), rng.getrandbits(32), rng.uniform(0.15, 0.5)
        )


def separation_candidate(rng: random.Random, leaves: int = 3, middle: int = 3) -> Dag:
    """
    rho over two vertices w1, w2, a middle layer whose vertices hang from a
    random non-empty part of {w1, w2}, and leaves below random middle
    vertices. Every leaf has a parent
    """
    labels = ["rho", "w1", "w2"]
    labels += [f"u{i}" for i in range(middle)]
    labels += [f"x{i}" for i in range(leaves)]
    top, mid, low = (1, 2), range(3, 3 + middle), range(3 + middle, 3 + middle + leaves)
    edges = {(0, 1), (0, 2)}
    for u in mid:
        parents = [w for w in top if rng.random() < 0.75] or [rng.choice(top)]
        edges.update((w, u) for w in parents)
        children = [x for x in low if rng.random() < 0.5] or [rng.choice(low)]
        edges.update((u, x) for x in children)
    for x in low:
        if not any(v == x for _, v in edges):
            edges.add((rng.choice(mid), x))
    return Dag(labels, sorted(edges))
