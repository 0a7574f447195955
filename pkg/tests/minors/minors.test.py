import itertools
import os
import sys
from unittest import mock

from lcadag import lca_config, lca_minors
from lcadag.lca_analysis import has_global_lca_pairwise, lca_set
from lcadag.lca_helpers import NotANetwork, SizeLimitExceeded
from lcadag.lca_minors import (
    disjoint_paths,
    find_strict_k22,
    has_x_or_xprime,
    k22_between,
    strict_k22_from_lca_pair,
    two_disjoint_paths,
    verify_minor_theorem,
)
from lcadag.lca_types import K22Subdivision, XSubdivision
from lcadag.tests import *
from lcadag.tests.test_creation_helpers import (
    CHERRY,
    FIG1,
    K22,
    PATH3,
    XGRAPH,
    XK22,
    XPRIME,
    corpus_networks,
    make_dag,
)

__dirname__ = os.path.dirname(__file__)


def _endpoints(g, subdivision):
    return (
        sorted(g.labels_of(subdivision.roots)),
        sorted(g.labels_of(subdivision.sinks)),
    )


class TestMinors(LcaDagTestCase):
    def test_two_disjoint_paths_k22(self):
        g = K22()
        r1, r2, l1, l2 = (g.id_of(x) for x in ("r1", "r2", "l1", "l2"))
        self.assertEqual(two_disjoint_paths(g, r1, l1, r2, l2), [(r1, l1), (r2, l2)])

    def test_two_disjoint_paths_must_not_share(self):
        g = PATH3()
        a, b, c = g.id_of("a"), g.id_of("b"), g.id_of("c")
        self.assertIsNone(two_disjoint_paths(g, a, b, b, c))
        self.assertIsNone(two_disjoint_paths(g, c, a, a, b))

    def test_two_disjoint_paths_xk22(self):
        g = XK22()
        r, r2, l, l2 = (g.id_of(x) for x in ("r", "r2", "l", "l2"))
        paths = two_disjoint_paths(g, r, l, r2, l2)
        self.assertIsNotNone(paths)
        first, second = paths
        self.assertEqual((first[0], first[-1], second[0], second[-1]), (r, l, r2, l2))
        self.assertFalse(set(first) & set(second))
        for path in paths:
            for u, v in zip(path, path[1:]):
                self.assertIn((u, v), g.edges)

    def test_disjoint_paths_needs_room(self):
        g = make_dag("s1 m\ns2 m\nm t1\nm t2\n")
        s1, s2, t1, t2 = (g.id_of(x) for x in ("s1", "s2", "t1", "t2"))
        self.assertIsNone(disjoint_paths(g, [(s1, t1), (s2, t2)]))
        self.assertEqual(disjoint_paths(g, [(s1, t1)]), [(s1, g.id_of("m"), t1)])

    def test_find_strict_k22(self):
        self.assertEqual(find_strict_k22(CHERRY()), [])

        g = FIG1()
        found = find_strict_k22(g)
        self.assertIn((["b", "c"], ["x", "y"]), [_endpoints(g, s) for s in found])
        for subdivision in found:
            self.assertCertificateValid(subdivision, g)

        g = XK22()
        found = find_strict_k22(g)
        self.assertIn((["r", "r2"], ["l", "l2"]), [_endpoints(g, s) for s in found])
        for subdivision in found:
            self.assertCertificateValid(subdivision, g)

    def test_find_strict_k22_limit_and_cap(self):
        self.assertEqual(len(find_strict_k22(FIG1(), limit=1)), 1)
        with mock.patch.dict(os.environ, {lca_config.ENV_MAX_VERTICES: "3"}):
            with self.assertRaises(SizeLimitExceeded):
                find_strict_k22(FIG1())

    def test_k22_between_needs_incomparable_endpoints(self):
        g = FIG1()
        self.assertIsNone(k22_between(g, g.ids_of(["a", "b"]), g.ids_of(["x", "y"])))

    def test_invalid_certificate_is_reported(self):
        g = FIG1()
        b, c, x, y = (g.id_of(v) for v in ("b", "c", "x", "y"))
        bad = K22Subdivision((b, c), (x, y), ((b, x), (b, x), (c, x), (c, y)))
        self.assertNotEqual(bad.is_invalid(g), "")
        self.assertNotEqual(
            K22Subdivision((b, b), (x, y), ((b, x), (b, y), (b, x), (b, y))).is_invalid(g), ""
        )

    def test_x_shape(self):
        g = XK22()
        verdict = has_x_or_xprime(g, g.ids_of(["r", "r2"]), g.ids_of(["l", "l2"]))
        self.assertTrue(verdict)
        self.assertTrue(verdict.witness.is_x)
        self.assertEqual(g.labels_of(verdict.witness.centers), ("v",))
        self.assertCertificateValid(verdict.witness, g)

        g = XGRAPH()
        verdict = has_x_or_xprime(g, g.ids_of(["r1", "r2"]), g.ids_of(["l1", "l2"]))
        self.assertTrue(verdict.witness.is_x)
        self.assertCertificateValid(verdict.witness, g)

    def test_xprime_shape(self):
        g = XPRIME()
        verdict = has_x_or_xprime(g, g.ids_of(["r1", "r2"]), g.ids_of(["l1", "l2"]))
        self.assertTrue(verdict)
        self.assertFalse(verdict.witness.is_x)
        self.assertEqual(g.labels_of(verdict.witness.centers), ("v", "w"))
        self.assertCertificateValid(verdict.witness, g)
        self.assertEqual(verdict.witness.to_json(g)["shape"], "X'")

    def test_no_x_in_fig1(self):
        g = FIG1()
        self.assertFalse(has_x_or_xprime(g, g.ids_of(["b", "c"]), g.ids_of(["x", "y"])))

    def test_strict_k22_from_lca_pair(self):
        g = FIG1()
        subdivision = strict_k22_from_lca_pair(g, g.id_of("x"), g.id_of("y"))
        self.assertEqual(_endpoints(g, subdivision), (["b", "c"], ["x", "y"]))
        self.assertCertificateValid(subdivision, g)
        self.assertIsNone(strict_k22_from_lca_pair(g, g.id_of("b"), g.id_of("c")))

    def test_verify_minor_theorem(self):
        verdict = verify_minor_theorem(FIG1())
        self.assertFalse(verdict)
        self.assertCertificateValid(verdict.witness, FIG1())
        self.assertTrue(verify_minor_theorem(XK22()))
        self.assertTrue(verify_minor_theorem(CHERRY()))
        with self.assertRaises(NotANetwork):
            verify_minor_theorem(K22())

    def test_minor_theorem_matches_recognition(self):
        for g in corpus_networks(500, 10, seed=14):
            verdict = verify_minor_theorem(g)
            self.assertEqual(bool(verdict), bool(has_global_lca_pairwise(g)), msg=repr(g))
            if not verdict:
                self.assertCertificateValid(verdict.witness, g)

    def test_minor_theorem_with_lca_shortcut(self):
        for g in corpus_networks(150, 8, seed=15):
            verdict = verify_minor_theorem(g, use_lca_shortcut=True)
            self.assertEqual(bool(verdict), bool(verify_minor_theorem(g)), msg=repr(g))
            if not verdict:
                self.assertCertificateValid(verdict.witness, g)

    def test_minor_theorem_computes_no_lca(self):
        with mock.patch.object(lca_minors, "lca_set", side_effect=AssertionError("lca_set called")):
            self.assertFalse(verify_minor_theorem(FIG1()))
            self.assertTrue(verify_minor_theorem(XK22()))

    def test_pairs_with_several_lcas_give_strict_subdivisions(self):
        for g in corpus_networks(100, 8, seed=16):
            found = None
            for u, v in itertools.combinations(g.ids, 2):
                lcas = lca_set(g, (u, v))
                if len(lcas) > 1:
                    found = (u, v, lcas)
                    break
            if found is None:
                self.assertTrue(has_global_lca_pairwise(g), msg=repr(g))
                continue
            u, v, lcas = found
            subdivision = strict_k22_from_lca_pair(g, u, v)
            self.assertCertificateValid(subdivision, g)
            self.assertTrue(set(subdivision.roots) <= set(lcas))
            self.assertTrue(set(subdivision.roots) <= set(lca_set(g, subdivision.sinks)))
            self.assertTrue(
                any(
                    set(s.roots) <= set(lcas) and set(s.roots) <= set(lca_set(g, s.sinks))
                    for s in find_strict_k22(g, limit=None)
                ),
                msg=repr(g),
            )

    def test_networks_without_strict_subdivisions_pass_recognition(self):
        for g in corpus_networks(200, 8, seed=17):
            if not find_strict_k22(g, limit=1):
                self.assertTrue(has_global_lca_pairwise(g), msg=repr(g))


runTestCases([TestMinors])
