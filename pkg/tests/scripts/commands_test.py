import argparse
import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from whitehead_lib.const import EXIT_OK
from whitehead_lib.exceptions import DocumentValidationError, PreconditionError
from whitehead_lib.parsing import load_presentation, parse_presentation
from whitehead_lib.scripts.common import run
from whitehead_lib.scripts.whitehead_bracket_set import bracket_set_of_document
from whitehead_lib.scripts.whitehead_check import check_document
from whitehead_lib.scripts.whitehead_dualize import dualize_document
from whitehead_lib.scripts.whitehead_examples import examples
from whitehead_lib.scripts.whitehead_formality import formality_of_document
from whitehead_lib.scripts.whitehead_graded_det import (
    andrews_arkowitz_of_document,
    graded_det_of_matrix,
    parse_matrix,
)
from whitehead_lib.scripts.whitehead_homology import homology_of_document
from whitehead_lib.scripts.whitehead_intrinsic_coformal import intrinsic_coformal
from whitehead_lib.scripts.whitehead_model import whitehead_model
from whitehead_lib.scripts.whitehead_ss import spectral_sequence_of_document

DOCUMENTS = os.path.join(os.path.dirname(__file__), "..", "..", "documents")


def document(name: str):
    return load_presentation(os.path.join(DOCUMENTS, name))


class TestCheckCommand(unittest.TestCase):
    def test_projective_plane(self):
        data = check_document(document("projective_plane.json"))
        self.assertTrue(data.passed)
        self.assertEqual(data.zero_differentials, [])

    def test_failing_differential(self):
        broken = parse_presentation(
            '{"kind": "dgl", "generators": [["a", 1], ["b", 2], ["c", 3]],'
            ' "differential": {"b": "a", "c": "b"}}'
        )
        data = check_document(broken)
        self.assertFalse(data.passed)
        self.assertEqual(data.failing, "c")

    def test_differential_expanding_to_zero(self):
        text = (
            '{"kind": "dgl", "generators": [["a", 1], ["c", 4]],'
            ' "differential": {"c": "[a, [a, a]]"}}'
        )
        data = check_document(parse_presentation(text))
        self.assertTrue(data.passed)
        self.assertEqual(data.zero_differentials, ["c"])

    def test_structure_and_algebra(self):
        linf = check_document(document("collapse_linf.json"))
        self.assertTrue(linf.passed)
        self.assertTrue(linf.properties["minimal"])
        cdga = check_document(document("collapse_cdga.json"))
        self.assertTrue(cdga.passed)
        self.assertEqual(cdga.properties, {"KS-ordered": True, "minimal": True})


class TestHomologyAndBrackets(unittest.TestCase):
    def setUp(self):
        self.document = document("projective_plane.json")

    def test_homology(self):
        data = homology_of_document(self.document, 4)
        self.assertEqual(data.dimension, 1)
        self.assertEqual(data.classes, {"H4_0": "[a, b]"})

    def test_bracket_set(self):
        data = bracket_set_of_document(self.document, ["a", "a", "a"])
        self.assertEqual(data.value, {"H4_0": "-3"})
        self.assertEqual(data.cardinality, "singleton")
        self.assertEqual(data.zero_membership, "no")
        self.assertFalse(data.undecided)

    def test_bracket_set_in_homology(self):
        data = bracket_set_of_document(self.document, ["a", "a", "a"], in_homology=True)
        self.assertEqual(data.target, "homology")
        self.assertEqual(data.zero_membership, "yes")

    def test_formality(self):
        data = formality_of_document(self.document, ["a", "a", "a"])
        self.assertEqual(data.verdict, "not_formal_1")
        report = data.toJSON()
        self.assertNotIn("schema", report["in_algebra"])
        self.assertEqual(report["in_homology"]["cardinality"], "singleton")


class TestNineCellCommands(unittest.TestCase):
    def setUp(self):
        self.document = document("nine_cell.json")

    def run_quietly(self, command) -> tuple[int, list[str]]:
        out = io.StringIO()
        args = argparse.Namespace(json=False, strict=False, verbose=False)
        with redirect_stdout(out), redirect_stderr(io.StringIO()):
            code = run(command, args)
        return code, out.getvalue().splitlines()

    def test_homology(self):
        code, lines = self.run_quietly(lambda: homology_of_document(self.document, 8))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines, ["H_8 has dimension 0"])
        code, lines = self.run_quietly(lambda: homology_of_document(self.document, 5))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines, ["H_5 has dimension 1", "H5_0: z"])

    def test_formality(self):
        classes = ["v1", "v2", "v3", "v4"]
        data = formality_of_document(self.document, classes)
        self.assertEqual(data.verdict, "not_formal_2")
        self.assertEqual(data.in_algebra.cardinality, "infinite")
        self.assertEqual(data.in_homology.cardinality, "singleton")
        self.assertEqual(data.in_homology.zero_membership, "yes")
        code, lines = self.run_quietly(lambda: formality_of_document(self.document, classes))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[0], "verdict: not_formal_2")


class TestModelCommand(unittest.TestCase):
    def test_two_spheres(self):
        data = whitehead_model([3, 3])
        self.assertTrue(data.passed)
        self.assertEqual(data.attaching_cycle, "[u1, u2]")
        self.assertEqual(data.toJSON()["generators"], [["u1", 2], ["u2", 2]])

    def test_output_document(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "model.json")
            whitehead_model([3, 3, 3], output=path)
            written = load_presentation(path)
        self.assertEqual(written.differential["u12"], "[u1, u2]")
        self.assertEqual(written.truncation, 8)


class TestGradedDetCommand(unittest.TestCase):
    def test_matrix(self):
        data = graded_det_of_matrix(parse_matrix("1,2;3,4"), [1, 1])
        self.assertEqual(data.value, -2)
        self.assertTrue(data.passed)
        self.assertEqual(graded_det_of_matrix(parse_matrix("1/2"), [2]).value, "1/2")

    def test_bad_matrix(self):
        with self.assertRaises(DocumentValidationError):
            parse_matrix("1,x;3,4")

    def test_andrews_arkowitz(self):
        collapse = document("collapse_linf.json")
        data = andrews_arkowitz_of_document(collapse, "z", ["y", "x", "x"], "z", relaxed=True)
        self.assertTrue(data.passed)
        self.assertTrue(data.signs_agree)
        self.assertEqual(data.values["member"], 1)
        with self.assertRaises(PreconditionError):
            andrews_arkowitz_of_document(collapse, "z", ["y", "x", "x"], "z")


class TestIntrinsicCommand(unittest.TestCase):
    def test_coformal(self):
        data = intrinsic_coformal([3, 5, 7, 9])
        self.assertTrue(data.coformal)
        self.assertEqual(data.lines(), ["YES"])

    def test_exotic_structure(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "exotic.json")
            data = intrinsic_coformal([3, 3, 3, 3, 11], exotic=path)
            written = load_presentation(path)
        self.assertEqual(data.lines(), ["NO, witness n5 = 3+3+3+3-1"])
        self.assertEqual(written.brackets, {4: {("x1", "x2", "x3", "x4"): "x5"}})


class TestDualizeCommand(unittest.TestCase):
    def test_structure_to_algebra(self):
        data = dualize_document(document("collapse_linf.json"))
        self.assertEqual(data.document["kind"], "cdga")
        self.assertEqual(data.document["differential"], {"z": "1/2*y^2 + 1/2*x^2*y"})
        self.assertEqual(data.document["options"], {"max_degree": 16})
        self.assertTrue(data.passed)
        self.assertTrue(data.properties["Sullivan"])

    def test_algebra_to_structure(self):
        data = dualize_document(document("collapse_cdga.json"))
        self.assertEqual(
            data.document["brackets"], {"2": {"y,y": "2*z"}, "3": {"x,x,y": "2*z"}}
        )
        self.assertTrue(data.passed)

    def test_wrong_kind(self):
        with self.assertRaises(DocumentValidationError):
            dualize_document(document("projective_plane.json"))


class TestSpectralSequenceCommand(unittest.TestCase):
    def test_projective_plane(self):
        data = spectral_sequence_of_document(document("projective_plane.json"), 2, max_degree=4)
        self.assertTrue(data.collapses)
        self.assertEqual(data.dimensions, {"1,2": 1, "2,4": 1})
        self.assertEqual(data.certified_degree, 4)

    def test_needs_a_degree(self):
        with self.assertRaises(DocumentValidationError):
            spectral_sequence_of_document(document("projective_plane.json"), 2)

    def test_wrong_kind(self):
        with self.assertRaises(DocumentValidationError):
            spectral_sequence_of_document(document("collapse_cdga.json"), 2, max_degree=4)


class TestExamplesCommand(unittest.TestCase):
    def test_selected_criteria(self):
        data = examples([2, 9])
        self.assertTrue(data.passed)
        self.assertEqual([c["number"] for c in data.criteria], [2, 9])

    def test_unknown_criterion(self):
        with self.assertRaises(DocumentValidationError):
            examples([42])
