"""Whitehead bracket set command."""

import sys

from ..parsing import (
    PresentationDocument,
    classify_config,
    extension_config,
    load_presentation,
    to_dgl,
)
from ..utils.rationals import format_rational
from ..whitehead import BracketSet, Classification, bracket_set, classify, homology_bracket_set
from .common import base_parser, lie_expressions, run
from .types import BracketSetData


def _rendered(values: dict | None) -> dict:
    return {name: format_rational(value) for name, value in (values or {}).items()}


def bracket_set_data(
    bracket: BracketSet, classification: Classification, target: str
) -> BracketSetData:
    witnesses = [_rendered(w) for w in classification.witnesses]
    if classification.zero_witness is not None:
        witnesses.insert(0, _rendered(classification.zero_witness))
    return BracketSetData(
        target,
        bracket.degree,
        bracket.is_empty,
        bracket.render(),
        list(bracket.parameters),
        [symbol.name for symbol in bracket.free_parameters],
        [str(c) for c in bracket.constraints],
        classification.cardinality.value,
        classification.zero_membership.value,
        witnesses,
    )


def bracket_set_of_document(
    document: PresentationDocument, classes: list[str], in_homology: bool = False
) -> BracketSetData:
    target = to_dgl(document)
    elements = lie_expressions(classes)
    config = extension_config(document)
    if in_homology:
        bracket = homology_bracket_set(target, elements, config)
    else:
        bracket = bracket_set(target, elements, config)
    classification = classify(bracket, classify_config(document))
    return bracket_set_data(bracket, classification, "homology" if in_homology else "algebra")


def start():
    """Entrypoint."""
    parser = base_parser("Higher Whitehead bracket set of cycle representatives")
    parser.add_argument("file", type=str, help="DGL presentation document (JSON)")
    parser.add_argument(
        "-c", "--classes", type=str, nargs="+", required=True, help="Cycle representatives"
    )
    parser.add_argument(
        "--homology", action="store_true", help="Compute the set in the homology Lie algebra"
    )
    args = parser.parse_args()

    sys.exit(
        run(
            lambda: bracket_set_of_document(
                load_presentation(args.file), args.classes, args.homology
            ),
            args,
        )
    )
