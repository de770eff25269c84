"""Argument handling, report output and exit codes shared by the commands."""

import argparse
import json
import logging
import sys
from typing import Callable

from ..const import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, EXIT_UNDECIDED
from ..exceptions import (
    DegreeError,
    DocumentError,
    DocumentValidationError,
    NotACycleError,
    UnknownGeneratorError,
    WhiteheadLibError,
)
from ..free_lie import LieExpr
from ..parsing import parse_lie_expression
from .types import CommandData

_LOGGER = logging.getLogger(__name__)

INPUT_ERRORS = (DocumentError, DegreeError, UnknownGeneratorError, NotACycleError, OSError)


def base_parser(description: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--json", action="store_true", help="Print the machine-readable report")
    parser.add_argument(
        "--strict", action="store_true", help="Exit with status 3 on undecided verdicts"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages")
    return parser


def integer_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise DocumentValidationError(f"Expected comma separated integers, got '{text}'")


def lie_expressions(texts: list[str]) -> list[LieExpr]:
    return [parse_lie_expression(text) for text in texts]


def emit(data: CommandData, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data.toJSON(), indent=2, ensure_ascii=False))
        return
    for line in data.lines():
        print(line)


def exit_code(data: CommandData, strict: bool) -> int:
    if not data.passed:
        return EXIT_CHECK_FAILED
    if strict and data.undecided:
        return EXIT_UNDECIDED
    return EXIT_OK


def run(command: Callable[[], CommandData], args: argparse.Namespace) -> int:
    """Run a command, print its report and map the outcome to an exit status."""
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        data = command()
    except INPUT_ERRORS as err:
        print(f"Error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except WhiteheadLibError as err:
        _LOGGER.debug("Command failed", exc_info=True)
        print(f"Error: {err}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    emit(data, args.json)
    return exit_code(data, args.strict)
