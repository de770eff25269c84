"""Whitehead examples command: the regression suite over the worked examples."""

import sys

from ..catalog import CRITERIA, run_regression
from ..exceptions import DocumentValidationError
from .common import base_parser, integer_list, run
from .types import ExamplesData


def examples(numbers: list[int] | None = None, quick: bool = False, seed: int = 0) -> ExamplesData:
    unknown = set(numbers or ()) - set(CRITERIA)
    if unknown:
        raise DocumentValidationError(f"Unknown criteria {sorted(unknown)}")
    results = run_regression(numbers, quick=quick, seed=seed)
    return ExamplesData(
        [
            {
                "number": result.number,
                "title": result.title,
                "passed": result.passed,
                "details": result.details,
            }
            for result in results
        ]
    )


def start():
    """Entrypoint."""
    parser = base_parser("Run the regression suite over the worked examples")
    parser.add_argument("--only", type=str, help="Criteria to run, e.g. 1,4,9")
    parser.add_argument("--quick", action="store_true", help="Fewer samples, lower degrees")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the random corpora")
    args = parser.parse_args()

    sys.exit(
        run(
            lambda: examples(
                integer_list(args.only) if args.only else None, args.quick, args.seed
            ),
            args,
        )
    )
