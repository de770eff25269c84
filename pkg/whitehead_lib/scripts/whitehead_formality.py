"""Whitehead formality command."""

import sys

from ..parsing import (
    PresentationDocument,
    classify_config,
    extension_config,
    load_presentation,
    to_dgl,
)
from ..whitehead import formality_obstruction
from .common import base_parser, lie_expressions, run
from .types import FormalityData
from .whitehead_bracket_set import bracket_set_data


def formality_of_document(document: PresentationDocument, classes: list[str]) -> FormalityData:
    report = formality_obstruction(
        to_dgl(document),
        lie_expressions(classes),
        extension_config(document),
        classify_config(document),
    )
    return FormalityData(
        report.verdict.value,
        bracket_set_data(report.in_algebra, report.algebra_classification, "algebra"),
        bracket_set_data(report.in_homology, report.homology_classification, "homology"),
    )


def start():
    """Entrypoint."""
    parser = base_parser("Try to discard formality with a higher Whitehead bracket set")
    parser.add_argument("file", type=str, help="DGL presentation document (JSON)")
    parser.add_argument(
        "-c", "--classes", type=str, nargs="+", required=True, help="Cycle representatives"
    )
    args = parser.parse_args()

    sys.exit(
        run(lambda: formality_of_document(load_presentation(args.file), args.classes), args)
    )
