import itertools
import os
import sys

from lcadag.lca_analysis import global_lca_reports, has_global_lca_pairwise, lca_set
from lcadag.lca_holju import (
    EXTEND_UNCHECKED,
    check_o_star,
    deconstruct,
    extend,
    l_set,
    random_global_lca,
    replay,
)
from lcadag.lca_helpers import (
    EmptyQuery,
    LabelCollision,
    MalformedInput,
    NotGlobalLca,
    NotHolju,
    OStarViolated,
)
from lcadag.lca_types import ConstructionTrace, k1
from lcadag.tests import *
from lcadag.tests.test_creation_helpers import (
    DIAMOND,
    FIG1,
    K1,
    K22,
    corpus_networks,
    ids,
)

__dirname__ = os.path.dirname(__file__)


class TestHolju(LcaDagTestCase):
    def test_l_set(self):
        g = DIAMOND()
        self.assertVerticesEqual(g, l_set(g, ids(g, "a", "b"), g.id_of("x")), ["a", "b"])
        self.assertVerticesEqual(g, l_set(g, ids(g, "rho", "a"), g.id_of("b")), ["rho"])
        for w in g.ids:
            self.assertEqual(l_set(g, [w], w), (w,))
        with self.assertRaises(EmptyQuery):
            l_set(g, [], 0)

    def test_check_o_star(self):
        g = DIAMOND()
        verdict = check_o_star(g, ids(g, "a", "b"))
        self.assertFalse(verdict)
        self.assertEqual(g.label_of(verdict.witness), "x")
        self.assertVerticesEqual(g, verdict.details["minimal"], ["a", "b"])

        self.assertTrue(check_o_star(g, ids(g, "rho", "a")))
        for v in g.ids:
            self.assertTrue(check_o_star(g, [v]))

    def test_check_o_star_validates_on_request(self):
        with self.assertRaises(NotGlobalLca):
            check_o_star(FIG1(), [0], validate=True)

    def test_extend(self):
        g = extend(K1(), [0], "v1")
        self.assertEdgesEqual(g, [("v", "v1")])

        g = DIAMOND()
        h = extend(g, ids(g, "rho", "a"), "z")
        self.assertEqual(h.n, 5)
        self.assertTrue(has_global_lca_pairwise(h))

    def test_extend_errors(self):
        g = DIAMOND()
        with self.assertRaises(OStarViolated) as cm:
            extend(g, ids(g, "a", "b"), "z")
        self.assertEqual(cm.exception.witness, "x")
        with self.assertRaises(LabelCollision):
            extend(g, ids(g, "a"), "x")
        with self.assertRaises(EmptyQuery):
            extend(g, [], "z")
        with self.assertRaises(ValueError):
            extend(g, ids(g, "a"), "z", mode="sometimes")

    def test_extend_unchecked_keeps_old_lcas(self):
        g = DIAMOND()
        h = extend(g, ids(g, "a", "b"), "z", EXTEND_UNCHECKED)
        self.assertFalse(has_global_lca_pairwise(h))
        for size in (1, 2, 3):
            for a in itertools.combinations(g.ids, size):
                old = g.labels_of(lca_set(g, a))
                new = h.labels_of(lca_set(h, h.ids_of(g.labels_of(a))))
                self.assertEqual(sorted(old), sorted(new))

    def test_checked_extend_lcas_of_new_leaf(self):
        for g in corpus_networks(150, 8, seed=12):
            if not has_global_lca_pairwise(g):
                continue
            for w in itertools.combinations(g.ids, 2):
                if not check_o_star(g, w):
                    continue
                h = extend(g, w, "new")
                x = h.id_of("new")
                for v in g.ids:
                    expected = g.labels_of(g.poset.minimal(l_set(g, w, v)))
                    found = h.labels_of(lca_set(h, (x, h.id_of(g.label_of(v)))))
                    self.assertEqual(sorted(expected), sorted(found), msg=repr(g))

    def test_deconstruct_diamond(self):
        g = DIAMOND()
        trace = deconstruct(g)
        self.assertEqual(trace.origin, "rho")
        self.assertEqual(len(trace), 3)
        self.assertEqual(trace.steps[-1].leaf, "x")
        self.assertEqual(trace.steps[-1].parents, ("a", "b"))
        self.assertEqual(replay(trace), g)

    def test_deconstruct_k1(self):
        trace = deconstruct(K1())
        self.assertEqual(len(trace), 0)
        self.assertEqual(trace.origin, "v")
        self.assertEqual(replay(trace), K1())

    def test_deconstruct_fig1_fails(self):
        with self.assertRaises(NotHolju) as cm:
            deconstruct(FIG1())
        self.assertEqual(cm.exception.prefix_size, 5)
        self.assertEqual(cm.exception.witness[0], "y")
        self.assertEqual(cm.exception.witness[2], "x")

    def test_deconstruct_multiple_roots(self):
        with self.assertRaises(NotHolju) as cm:
            deconstruct(K22())
        self.assertEqual(cm.exception.reason, "multiple roots")
        self.assertEqual(cm.exception.prefix_size, 2)

    def test_replay_errors(self):
        trace = ConstructionTrace.from_steps("r", [("a", ["r"]), ("b", ["q"])])
        with self.assertRaises(MalformedInput):
            replay(trace)

        trace = ConstructionTrace.from_steps(
            "rho", [("a", ["rho"]), ("b", ["rho"]), ("x", ["a", "b"]), ("z", ["a", "b"])]
        )
        with self.assertRaises(OStarViolated) as cm:
            replay(trace)
        self.assertEqual(cm.exception.step, 4)
        self.assertEqual(replay(trace, EXTEND_UNCHECKED).n, 5)

    def test_random_global_lca(self):
        g, trace = random_global_lca(1, seed=0)
        self.assertEqual(g, k1("v0"))
        self.assertEqual(len(trace), 0)

        g, trace = random_global_lca(10, seed=42)
        self.assertEqual(g.n, 10)
        self.assertTrue(has_global_lca_pairwise(g))
        self.assertEqual(replay(trace), g)
        self.assertEqual(random_global_lca(10, seed=42), (g, trace))
        with self.assertRaises(ValueError):
            random_global_lca(0)

    def test_random_global_lca_fallback_warns(self):
        g, trace = random_global_lca(5, seed=1, retry_budget=0)
        self.assertTrue(all(len(step.parents) == 1 for step in trace.steps))
        self.assertLoggerWarnings(4)

    def test_generated_networks_pass_every_route(self):
        for seed in range(200):
            n = 1 + seed % 15
            g, trace = random_global_lca(n, seed=seed)
            for report in global_lca_reports(g).values():
                self.assertTrue(report, msg=f"seed {seed}: {g!r}")
            self.assertEqual(replay(deconstruct(g)), g)
            for size in range(1, n + 1):
                self.assertTrue(has_global_lca_pairwise(replay(trace.prefix(size))))

    def test_deconstruct_decides_recognition(self):
        for g in corpus_networks(500, 12, seed=13):
            holds = bool(has_global_lca_pairwise(g))
            try:
                trace = deconstruct(g)
            except NotHolju as e:
                self.assertFalse(holds, msg=repr(g))
                self.assertIsNotNone(e.prefix_size)
                self.assertIsNotNone(e.witness)
            else:
                self.assertTrue(holds, msg=repr(g))
                self.assertEqual(replay(trace), g)


runTestCases([TestHolju])
