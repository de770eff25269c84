"""Whitehead check command."""

import sys

from ..const import DEFAULT_JACOBI_ARITY
from ..dgl import check_d_squared
from ..enums import DocumentKind
from ..linf import brackets_to_coderivation, check_codifferential, check_generalized_jacobi
from ..parsing import PresentationDocument, load_presentation, to_cdga, to_dgl, to_linf
from .common import base_parser, run
from .types import CheckData


def check_document(
    document: PresentationDocument, arity: int | None = None
) -> CheckData:
    """Run the well-definedness gates of a document's kind."""
    if document.kind == DocumentKind.DGL:
        presentation = to_dgl(document)
        report = check_d_squared(presentation)
        zero = [
            name
            for name, expr in presentation.differential_map.items()
            if not expr.is_formally_zero() and not presentation.expand(expr)
        ]
        return CheckData(
            document.kind.value,
            {"d^2 = 0": report.passed},
            failing=report.failing_generator,
            zero_differentials=zero,
        )

    if document.kind == DocumentKind.LINF:
        structure = to_linf(document)
        up_to = (
            arity
            or document.options.get("jacobi_arity")
            or max(DEFAULT_JACOBI_ARITY, 2 * structure.arity_bound - 1)
        )
        jacobi = check_generalized_jacobi(structure, up_to)
        codifferential = check_codifferential(
            brackets_to_coderivation(structure), max_length=up_to
        )
        failing = None
        if not jacobi:
            failing = f"Jacobi identity of arity {jacobi.violation_arity} on {jacobi.violation_args}"
        return CheckData(
            document.kind.value,
            {"generalized Jacobi": jacobi.passed, "delta^2 = 0": codifferential.passed},
            failing=failing,
            verified_up_to=jacobi.verified_up_to,
            properties={"minimal": structure.is_minimal(), "reduced": structure.is_reduced()},
        )

    algebra = to_cdga(document)
    report = algebra.check_d_squared()
    return CheckData(
        document.kind.value,
        {"d^2 = 0": report.passed},
        failing=report.failing_generator,
        properties={"KS-ordered": algebra.is_ks_ordered(), "minimal": algebra.is_minimal()},
    )


def start():
    """Entrypoint."""
    parser = base_parser("Check d^2 = 0 or the generalized Jacobi identities of a document")
    parser.add_argument("file", type=str, help="Presentation document (JSON)")
    parser.add_argument(
        "-n", "--arity", type=int, help="Check the Jacobi identities up to this arity"
    )
    args = parser.parse_args()

    sys.exit(run(lambda: check_document(load_presentation(args.file), args.arity), args))
