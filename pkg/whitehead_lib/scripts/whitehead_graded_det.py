"""Whitehead graded determinant command."""

import sys

from ..exceptions import DocumentValidationError
from ..parsing import (
    PresentationDocument,
    load_presentation,
    parse_linear_combination,
    to_linf,
)
from ..sullivan import andrews_arkowitz_check, graded_det, graded_det_by_expansion
from ..utils.rationals import format_rational, parse_rational
from .common import base_parser, integer_list, run
from .types import AndrewsArkowitzData, GradedDetData


def parse_matrix(text: str) -> list[list]:
    """Rows separated by ';', entries by ','."""
    try:
        return [[parse_rational(v) for v in row.split(",")] for row in text.split(";")]
    except (ValueError, ZeroDivisionError) as err:
        raise DocumentValidationError(f"Bad matrix '{text}': {err}")


def graded_det_of_matrix(matrix: list[list], degrees: list[int]) -> GradedDetData:
    return GradedDetData(
        list(degrees),
        format_rational(graded_det(matrix, degrees)),
        format_rational(graded_det_by_expansion(matrix, degrees)),
    )


def andrews_arkowitz_of_document(
    document: PresentationDocument,
    generator: str,
    classes: list[str],
    member: str,
    relaxed: bool = False,
) -> AndrewsArkowitzData:
    report = andrews_arkowitz_check(
        to_linf(document),
        generator,
        [parse_linear_combination(text) for text in classes],
        parse_linear_combination(member),
        require_precondition=not relaxed,
    )
    values = {
        "member": report.lhs,
        "bracket": report.bracket_side,
        "determinant": report.classical_side,
        "rho": report.rho_value,
        "pairing": report.pairing_value,
    }
    return AndrewsArkowitzData(
        generator,
        list(classes),
        member,
        {name: format_rational(value) for name, value in values.items()},
        report.holds,
        report.signs_agree,
        report.precondition_met,
    )


def start():
    """Entrypoint."""
    parser = base_parser(
        "Graded determinant of a matrix, or the bracket/determinant equality of a document"
    )
    parser.add_argument("file", type=str, nargs="?", help="linf presentation document (JSON)")
    parser.add_argument("-m", "--matrix", type=str, help="Matrix rows, e.g. '1,2;3,4'")
    parser.add_argument("-d", "--degrees", type=str, help="Column degrees, e.g. 1,1")
    parser.add_argument("-g", "--generator", type=str, help="Generator v of the dual algebra")
    parser.add_argument("-c", "--classes", type=str, nargs="+", help="Classes x_1..x_r")
    parser.add_argument("--member", type=str, help="Member of the bracket set")
    parser.add_argument(
        "--relaxed",
        action="store_true",
        help="Compare both sides even if d(v) has words shorter than r",
    )
    args = parser.parse_args()

    if args.matrix is not None and args.degrees is not None:
        command = lambda: graded_det_of_matrix(
            parse_matrix(args.matrix), integer_list(args.degrees)
        )
    elif args.file and args.generator and args.classes and args.member:
        command = lambda: andrews_arkowitz_of_document(
            load_presentation(args.file), args.generator, args.classes, args.member, args.relaxed
        )
    else:
        parser.print_help()
        return

    sys.exit(run(command, args))
