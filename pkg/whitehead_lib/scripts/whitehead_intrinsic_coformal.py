"""Whitehead intrinsic coformality command."""

import logging
import sys

from ..parsing import document_from_linf, serialize_presentation
from ..sullivan import exotic_structure, intrinsic_coformality
from .common import base_parser, integer_list, run
from .types import IntrinsicCoformalData

_LOGGER = logging.getLogger(__name__)


def intrinsic_coformal(
    dimensions: list[int], eilenberg_mac_lane: bool = False, exotic: str | None = None
) -> IntrinsicCoformalData:
    report = intrinsic_coformality(dimensions, eilenberg_mac_lane)
    if exotic is not None and report.witness is not None:
        structure = exotic_structure(report.dimensions, report.witness)
        with open(exotic, "w", encoding="utf-8") as handle:
            handle.write(serialize_presentation(document_from_linf(structure)))
        _LOGGER.info("Exotic structure written to %s", exotic)
    return IntrinsicCoformalData(
        list(report.dimensions),
        report.eilenberg_mac_lane,
        report.coformal,
        report.describe_witness(),
    )


def start():
    """Entrypoint."""
    parser = base_parser("Intrinsic coformality of a product of odd spheres")
    parser.add_argument("--spheres", type=str, required=True, help="Dimensions, e.g. 3,3,3,3,11")
    parser.add_argument(
        "--eilenberg-mac-lane",
        action="store_true",
        help="Read the dimensions as even Eilenberg-Mac Lane factors",
    )
    parser.add_argument(
        "--exotic", type=str, help="Write an exotic structure realising the witness"
    )
    args = parser.parse_args()

    sys.exit(
        run(
            lambda: intrinsic_coformal(
                integer_list(args.spheres), args.eilenberg_mac_lane, args.exotic
            ),
            args,
        )
    )
