"""Whitehead dualize command."""

import logging
import sys

from ..enums import DocumentKind
from ..exceptions import DocumentValidationError
from ..linf import check_generalized_jacobi
from ..parsing import (
    PresentationDocument,
    document_from_cdga,
    document_from_linf,
    load_presentation,
    serialize_presentation,
    to_cdga,
    to_linf,
)
from ..sullivan import brackets_from_differential, dualize, is_sullivan
from .common import base_parser, run
from .types import DualizeData

_LOGGER = logging.getLogger(__name__)


def dualize_document(
    document: PresentationDocument, output: str | None = None
) -> DualizeData:
    """linf -> cdga through the dual pairing, cdga -> linf back."""
    if document.kind == DocumentKind.LINF:
        structure = to_linf(document)
        algebra = dualize(structure)
        result = document_from_cdga(algebra, document.options)
        sullivan = is_sullivan(structure)
        checks = {"d^2 = 0": algebra.check_d_squared().passed}
        properties = {
            "Sullivan": sullivan.is_sullivan,
            "lower central series": sullivan.series_dimensions,
        }
        if sullivan.witness_degree is not None:
            properties["obstructed in degree"] = sullivan.witness_degree
    elif document.kind == DocumentKind.CDGA:
        structure = brackets_from_differential(to_cdga(document))
        result = document_from_linf(structure, document.options)
        up_to = max(1, 2 * structure.arity_bound - 1)
        checks = {"generalized Jacobi": check_generalized_jacobi(structure, up_to).passed}
        properties = {"minimal": structure.is_minimal()}
    else:
        raise DocumentValidationError("Dualization needs a linf or cdga document")
    if output is not None:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(serialize_presentation(result))
        _LOGGER.info("Dual document written to %s", output)
    return DualizeData(document.kind.value, result.toJSON(), checks, properties)


def start():
    """Entrypoint."""
    parser = base_parser("Dualize an L-infinity structure to its Sullivan algebra, or back")
    parser.add_argument("file", type=str, help="linf or cdga presentation document (JSON)")
    parser.add_argument("-o", "--output", type=str, help="Write the dual document")
    args = parser.parse_args()

    sys.exit(run(lambda: dualize_document(load_presentation(args.file), args.output), args))
