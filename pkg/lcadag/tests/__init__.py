import os
import pathlib
import sys
import unittest
from typing import Iterable, Sequence

from lcadag.lca_config import getDebug, setDebug
from lcadag.lca_helpers import LcaDagLogger, logger
from lcadag.lca_types import Dag, SetSystem

__dirname__ = os.path.dirname(__file__)


class LcaDagTestCase(unittest.TestCase):
    def setUp(self, useLogger=True):
        setDebug(getDebug() or "--force-lcadag-debug" in sys.argv)

        if useLogger:
            self.useLogger()

    def useLogger(self):
        debug = getDebug()
        logLevels = ["error", "warning"]

        if debug:
            logLevels.append("info")
            logLevels.append("success")

        logger.clear()
        logger.addTransport(LcaDagLogger.ConsoleTransport(), logLevels)

    def assertLoggerErrors(self, expected_logger_errors: int) -> None:
        """
        Asserts the logger has some number of errors, then clears the logger
        of all messages
        """
        try:
            found_errors = len(logger.findErrors())
            self.assertEqual(found_errors, expected_logger_errors)
        except AssertionError as e:
            raise AssertionError(
                f"Expected {expected_logger_errors} logger errors, got {found_errors}"
            ) from None
        else:
            logger.clearMessages()

    def assertLoggerWarnings(self, expected_logger_warnings: int) -> None:
        self.assertEqual(len(logger.findWarnings()), expected_logger_warnings)
        logger.clearMessages()

    def assertVerticesEqual(self, g: Dag, ids: Iterable[int], labels: Iterable[str]) -> None:
        """Compares vertex ids of g by their labels, order ignored"""
        self.assertEqual(sorted(g.labels_of(ids)), sorted(labels))

    def assertFamilyEqual(self, s: SetSystem, family: Iterable[Iterable[str]]) -> None:
        self.assertEqual(s.family(), frozenset(frozenset(m) for m in family))

    def assertEdgesEqual(self, g: Dag, edges: Iterable[Sequence[str]]) -> None:
        self.assertEqual(g.labeled_edges, frozenset(tuple(e) for e in edges))

    def assertCertificateValid(self, certificate, g: Dag) -> None:
        problem = certificate.is_invalid(g)
        self.assertEqual(problem, "", msg=f"{certificate} is invalid: {problem}")


def get_project_folder() -> pathlib.Path:
    """Returns the full path to the project folder"""
    return pathlib.Path(__file__).parent.parent.parent


def get_tests_folder() -> pathlib.Path:
    return pathlib.Path(get_project_folder(), "tests")


def get_tmp_folder() -> pathlib.Path:
    return pathlib.Path(get_tests_folder(), "tmp")


def runTestCases(testCases):
    # Only one suite per file, the runner counts results per file
    assert (
        len(testCases) == 1
    ), "Currently, only one test case per suite is supported at a time"
    # Only self-run when the test file is executed as a script (tests.py);
    # under pytest the file is imported and pytest collects the cases itself
    if sys._getframe(1).f_globals.get("__name__") != "__main__":
        return
    suite = unittest.defaultTestLoader.loadTestsFromTestCase(testCases[0])
    test_result = unittest.TextTestRunner().run(suite)

    # See tests.py for documentation. The strings must be kept in sync!
    # This is not an optional debug print statement! The test runner needs this print statement to function
    print(
        f"RESULT: After {(test_result.testsRun)} tests got {len(test_result.errors)} errors, {len(test_result.failures)} failures, and {len(test_result.skipped)} skipped"
    )
