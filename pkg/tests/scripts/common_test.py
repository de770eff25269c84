import argparse
import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout

from whitehead_lib.const import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNDECIDED,
    REPORT_SCHEMA,
)
from whitehead_lib.exceptions import DocumentValidationError, SignConventionError
from whitehead_lib.scripts.common import integer_list, run
from whitehead_lib.scripts.types import BracketSetData, GradedDetData


def arguments(**overrides) -> argparse.Namespace:
    values = {"json": False, "strict": False, "verbose": False}
    values.update(overrides)
    return argparse.Namespace(**values)


def bracket_data(cardinality: str = "singleton", zero: str = "no") -> BracketSetData:
    return BracketSetData("algebra", 4, False, {"H4_0": "-3"}, [], [], [], cardinality, zero)


def run_quietly(command, args) -> tuple[int, str]:
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = run(command, args)
    return code, out.getvalue()


class TestIntegerList(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(integer_list("3,3,11"), [3, 3, 11])
        self.assertEqual(integer_list("3, 5,"), [3, 5])

    def test_invalid(self):
        with self.assertRaises(DocumentValidationError):
            integer_list("3,a")


class TestRun(unittest.TestCase):
    def test_ok(self):
        code, out = run_quietly(bracket_data, arguments())
        self.assertEqual(code, EXIT_OK)
        self.assertIn("cardinality: singleton, contains 0: no", out)

    def test_json_report(self):
        code, out = run_quietly(bracket_data, arguments(json=True))
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["schema"], REPORT_SCHEMA)
        self.assertEqual(report["command"], "bracket-set")
        self.assertEqual(report["value"], {"H4_0": "-3"})

    def test_failed_check(self):
        code, _ = run_quietly(lambda: GradedDetData([1, 1], -2, 2), arguments())
        self.assertEqual(code, EXIT_CHECK_FAILED)

    def test_undecided(self):
        command = lambda: bracket_data(cardinality="undecided")
        self.assertEqual(run_quietly(command, arguments())[0], EXIT_OK)
        self.assertEqual(run_quietly(command, arguments(strict=True))[0], EXIT_UNDECIDED)
        command = lambda: bracket_data(zero="unknown")
        self.assertEqual(run_quietly(command, arguments(strict=True))[0], EXIT_UNDECIDED)

    def test_input_error(self):
        def command():
            raise DocumentValidationError("bad document")

        self.assertEqual(run_quietly(command, arguments())[0], EXIT_INPUT_ERROR)

    def test_missing_file(self):
        def command():
            open("/nonexistent/document.json")

        self.assertEqual(run_quietly(command, arguments())[0], EXIT_INPUT_ERROR)

    def test_library_error(self):
        def command():
            raise SignConventionError("d^2 != 0")

        self.assertEqual(run_quietly(command, arguments())[0], EXIT_CHECK_FAILED)
