import inspect
import os
import sys

from lcadag.lca_dag_core import build_dag
from lcadag.lca_helpers import CycleDetected, InvalidLabel, ParseError
from lcadag.lca_utils.lca_dot import emit_dot, load_dot
from lcadag.lca_utils.lca_edge_list_parser import (
    emit_edge_list,
    load_edge_list,
    parse_edge_list,
)
from lcadag.tests import *
from lcadag.tests.test_creation_helpers import ALL_FIXTURES, FIG1, K1, PATH3

__dirname__ = os.path.dirname(__file__)


def _fixture_text(filename: str) -> str:
    with open(os.path.join(__dirname__, "test_edge_list_txts", filename + ".txt")) as f:
        return f.read()


class TestEdgeListParser(LcaDagTestCase):
    def test_parse_edges_and_nodes(self):
        self.assertEqual(parse_edge_list("a b\nb c\n"), ([("a", "b"), ("b", "c")], []))
        self.assertEqual(parse_edge_list("node z\n"), ([], ["z"]))
        self.assertEqual(
            parse_edge_list("\n# header\n  a   b  # trailing\n\tnode c\n"),
            ([("a", "b")], ["c"]),
        )

    def test_parse_errors(self):
        self.assertEqual(parse_edge_list(""), "File has no vertices in it")
        self.assertEqual(parse_edge_list("# only a comment\n\n"), "File has no vertices in it")
        result = parse_edge_list("a b\nlonely\n")
        self.assertIsInstance(result, str)
        self.assertTrue(result.startswith("Line 2:"), msg=result)
        self.assertTrue(parse_edge_list("a b c").startswith("Line 1:"))

    def test_load_fixture_with_comments(self):
        g = load_edge_list(_fixture_text(inspect.stack()[0][3]))
        self.assertEqual(g.labels, ("a", "b", "c", "x", "y", "z"))
        self.assertEdgesEqual(g, [("a", "b"), ("a", "c"), ("b", "x"), ("b", "y"), ("c", "x"), ("c", "y")])
        self.assertEqual(g, build_dag([e for e in FIG1().labeled_edges], ["z"]))

    def test_load_fixture_bad_line(self):
        with self.assertRaises(ParseError) as cm:
            load_edge_list(_fixture_text(inspect.stack()[0][3]))
        self.assertEqual(cm.exception.line, 4)
        self.assertIsInstance(cm.exception, ValueError)

    def test_load_passes_graph_errors_through(self):
        with self.assertRaises(CycleDetected):
            load_edge_list("a b\nb a\n")
        with self.assertRaises(ParseError) as cm:
            load_edge_list("")
        self.assertIsNone(cm.exception.line)

    def test_emit(self):
        self.assertEqual(emit_edge_list(PATH3()), "a b\nb c\n")
        self.assertEqual(emit_edge_list(K1()), "node v\n")
        self.assertEqual(emit_edge_list(build_dag([("a", "b")], ["c"])), "a b\nnode c\n")

    def test_emit_then_load(self):
        for name, g in ALL_FIXTURES():
            self.assertEqual(load_edge_list(emit_edge_list(g)), g, msg=name)

    def test_vertex_named_node(self):
        as_child = build_dag([("a", "node")])
        self.assertEqual(load_edge_list(emit_edge_list(as_child)), as_child)
        isolated = build_dag([], ["node"])
        self.assertEqual(emit_edge_list(isolated), "node node\n")
        self.assertEqual(load_edge_list("node node\n"), isolated)

        with self.assertRaises(InvalidLabel) as cm:
            emit_edge_list(build_dag([("node", "a")]))
        self.assertEqual(cm.exception.witness, "node")

    def test_label_with_comment_char(self):
        g = build_dag([("a#1", "b")])
        with self.assertRaises(InvalidLabel) as cm:
            emit_edge_list(g)
        self.assertEqual(cm.exception.witness, "a#1")
        self.assertEqual(load_dot(emit_dot(g)), g)

    def test_emit_then_load_on_unusual_labels(self):
        g = build_dag([("a.b", "c-d"), ("a.b", "{e}"), ("c-d", "f,g")], ["node_x"])
        self.assertEqual(load_edge_list(emit_edge_list(g)), g)


runTestCases([TestEdgeListParser])
