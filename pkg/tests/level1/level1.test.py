import os
import sys

from lcadag.lca_analysis import global_lca_reports
from lcadag.lca_dag_core import hybrids, is_network
from lcadag.lca_helpers import NotANetwork
from lcadag.lca_level1 import blocks, is_galled_tree, is_level1, random_level1
from lcadag.lca_transform import lxt
from lcadag.tests import *
from lcadag.tests.test_creation_helpers import (
    CHERRY,
    DIAMOND,
    FIG1,
    GALLED1,
    K1,
    K22,
    PATH3,
    XK22,
    corpus_networks,
)

__dirname__ = os.path.dirname(__file__)


def _labeled_blocks(g):
    return sorted(sorted(g.labels_of(b)) for b in blocks(g))


class TestLevel1(LcaDagTestCase):
    def test_blocks(self):
        self.assertEqual(_labeled_blocks(PATH3()), [["a", "b"], ["b", "c"]])
        self.assertEqual(_labeled_blocks(DIAMOND()), [["a", "b", "rho", "x"]])
        self.assertEqual(_labeled_blocks(GALLED1()), [["a", "b", "h", "rho"], ["h", "x"]])
        self.assertEqual(_labeled_blocks(K1()), [["v"]])

    def test_is_level1(self):
        self.assertTrue(is_level1(GALLED1()))
        self.assertTrue(is_level1(CHERRY()))
        g = FIG1()
        verdict = is_level1(g)
        self.assertFalse(verdict)
        self.assertVerticesEqual(g, verdict.details["hybrids"], ["x", "y"])

    def test_is_galled_tree(self):
        self.assertTrue(is_galled_tree(GALLED1()))
        self.assertTrue(is_galled_tree(CHERRY()))
        self.assertTrue(is_galled_tree(K1()))
        self.assertFalse(is_galled_tree(XK22()))
        self.assertFalse(is_galled_tree(FIG1()))

    def test_needs_a_network(self):
        with self.assertRaises(NotANetwork):
            is_level1(K22())
        with self.assertRaises(NotANetwork):
            is_galled_tree(K22())

    def test_random_level1(self):
        for n in (1, 2, 5, 20):
            g = random_level1(n, seed=n)
            self.assertEqual(g.n, n)
            self.assertTrue(is_network(g))
        self.assertEqual(random_level1(12, seed=3), random_level1(12, seed=3))
        with self.assertRaises(ValueError):
            random_level1(0)

    def test_generated_galled_trees_have_the_global_lca_property(self):
        with_hybrids = 0
        for seed in range(100):
            g = random_level1(1 + seed % 20, seed=seed)
            self.assertTrue(is_galled_tree(g), msg=f"seed {seed}: {g!r}")
            self.assertTrue(is_level1(g), msg=f"seed {seed}: {g!r}")
            for report in global_lca_reports(g).values():
                self.assertTrue(report, msg=f"seed {seed}: {g!r}")
            self.assertTrue(is_level1(lxt(g)))
            with_hybrids += bool(hybrids(g))
        self.assertGreater(with_hybrids, 0)

    def test_galled_trees_are_level1_on_corpus(self):
        for g in corpus_networks(500, 10, seed=18):
            if is_galled_tree(g):
                self.assertTrue(is_level1(g), msg=repr(g))
            if is_level1(g):
                self.assertTrue(is_level1(lxt(g)), msg=repr(g))
                for report in global_lca_reports(g).values():
                    self.assertTrue(report, msg=repr(g))


runTestCases([TestLevel1])
