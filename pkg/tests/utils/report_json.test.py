import json
import os
import sys

from lcadag.lca_analysis import global_lca_reports, has_global_lca_pairwise
from lcadag.lca_constants import (
    ROUTE_PAIRWISE_VERTEX,
    SYSTEM_DESCENDANTS,
    WITNESS_PAIR,
    WITNESS_SET_PAIR,
    WITNESS_SUBDIVISION,
    WITNESS_SUBSET,
    WITNESS_VERTEX,
)
from lcadag.lca_minors import find_strict_k22
from lcadag.lca_setsys import descendants, is_closed, is_pre_binary
from lcadag.lca_types import Route, Verdict, VertexSet
from lcadag.lca_utils.lca_report_json import (
    dumps,
    global_lca_json,
    set_system_json,
    verdict_json,
    witness_json,
)
from lcadag.tests import *
from lcadag.tests.test_creation_helpers import CHERRY, FIG1, PATH3

__dirname__ = os.path.dirname(__file__)


class TestReportJson(LcaDagTestCase):
    def test_dumps_sorts_keys(self):
        self.assertEqual(dumps({"b": 1, "a": [2]}), '{\n  "a": [\n    2\n  ],\n  "b": 1\n}')

    def test_global_lca_json_all_routes(self):
        out = global_lca_json(global_lca_reports(FIG1()), 1.23456)
        self.assertFalse(out["holds"])
        self.assertEqual(out["predicate"], "global-lca")
        self.assertEqual(out["timing_ms"], 1.235)
        self.assertEqual(out["routes"], {route.value: False for route in Route})
        self.assertNotIn("route", out)
        self.assertIn("witness", out)
        json.loads(dumps(out))

    def test_global_lca_json_single_route(self):
        reports = {Route.PAIRWISE_VERTEX: has_global_lca_pairwise(CHERRY())}
        out = global_lca_json(reports, 0.0)
        self.assertEqual(out, {"holds": True, "predicate": "global-lca", "route": ROUTE_PAIRWISE_VERTEX, "timing_ms": 0.0})

    def test_witness_json(self):
        g = PATH3()
        self.assertIsNone(witness_json(g, None))
        self.assertEqual(witness_json(g, 0), {"type": WITNESS_VERTEX, "vertices": ["a"]})
        self.assertEqual(witness_json(g, VertexSet((0, 2))), {"type": WITNESS_PAIR, "vertices": ["a", "c"]})
        self.assertEqual(
            witness_json(g, VertexSet((0, 1, 2))), {"type": WITNESS_SUBSET, "vertices": ["a", "b", "c"]}
        )
        self.assertEqual(
            witness_json(g, (VertexSet((1, 0)), VertexSet((2,)))),
            {"type": WITNESS_SET_PAIR, "sets": [["a", "b"], ["c"]]},
        )
        self.assertEqual(witness_json(g, "odd"), {"type": "str", "value": "'odd'"})

    def test_subdivision_witness(self):
        g = FIG1()
        out = witness_json(g, find_strict_k22(g)[0])
        self.assertEqual(out["type"], WITNESS_SUBDIVISION)
        self.assertTrue(out["strict"])
        self.assertEqual(len(out["paths"]), 4)

    def test_verdict_json(self):
        g = PATH3()
        self.assertEqual(
            verdict_json(g, "level-1", Verdict(True), 0.5),
            {"holds": True, "predicate": "level-1", "timing_ms": 0.5},
        )
        out = verdict_json(g, "level-1", Verdict(False, witness=VertexSet((1, 2))), 0.5)
        self.assertEqual(out["witness"], {"type": WITNESS_PAIR, "vertices": ["b", "c"]})
        self.assertNotIn("witness", verdict_json(g, "level-1", Verdict(False), 0.5))

    def test_set_system_json(self):
        d = descendants(FIG1())
        out = set_system_json(d, [("closed", is_closed(d)), ("pre_binary", is_pre_binary(d))])
        self.assertEqual(out["system"], SYSTEM_DESCENDANTS)
        self.assertEqual(
            out["family"],
            [["x"], ["y"], ["b", "x", "y"], ["c", "x", "y"], ["a", "b", "c", "x", "y"]],
        )
        self.assertEqual(
            out["closed"],
            {"holds": False, "witness": {"type": WITNESS_SET_PAIR, "sets": [["b", "x", "y"], ["c", "x", "y"]]}},
        )
        self.assertEqual(
            out["pre_binary"],
            {"holds": False, "witness": {"type": WITNESS_SUBSET, "vertices": ["x", "y"]}},
        )

        d = descendants(CHERRY())
        self.assertEqual(set_system_json(d, [("closed", is_closed(d))])["closed"], {"holds": True})


runTestCases([TestReportJson])
