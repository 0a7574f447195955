import os
import sys

from lcadag.lca_helpers import (
    CycleDetected,
    InputError,
    LcaDagError,
    NotHolju,
    ParseError,
    SizeLimitExceeded,
    check_size,
    format_labels,
)
from lcadag.tests import *

__dirname__ = os.path.dirname(__file__)


class TestHelpers(LcaDagTestCase):
    def test_format_labels(self):
        self.assertEqual(format_labels(["b", "a"]), "{b,a}")
        self.assertEqual(format_labels([]), "{}")

    def test_check_size(self):
        check_size("isomorphism test", 24, 24)
        with self.assertRaises(SizeLimitExceeded) as cm:
            check_size("isomorphism test", 25, 24)
        self.assertEqual(cm.exception.witness, 25)
        self.assertIn("LCADAG_MAX_N", str(cm.exception))

    def test_error_hierarchy(self):
        self.assertTrue(issubclass(CycleDetected, InputError))
        self.assertTrue(issubclass(ParseError, ValueError))
        self.assertFalse(issubclass(SizeLimitExceeded, ValueError))
        self.assertTrue(issubclass(NotHolju, LcaDagError))

        e = ParseError("Line 3: bad", line=3, witness="x y z")
        self.assertEqual((str(e), e.line, e.witness), ("Line 3: bad", 3, "x y z"))
        e = NotHolju("no", witness=("y",), prefix_size=5, reason="(O*) violated")
        self.assertEqual((e.prefix_size, e.reason), (5, "(O*) violated"))


runTestCases([TestHelpers])
