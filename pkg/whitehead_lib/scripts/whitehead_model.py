"""Whitehead model command."""

import logging
import sys

from ..dgl import check_d_squared
from ..parsing import document_from_dgl, serialize_presentation
from ..whitehead import WhiteheadModel, build_model
from .common import base_parser, integer_list, run
from .types import ModelData

_LOGGER = logging.getLogger(__name__)


def model_data(model: WhiteheadModel) -> ModelData:
    presentation = model.presentation
    return ModelData(
        model.dimensions,
        list(presentation.generators.generators),
        {name: expr.render() for name, expr in presentation.differential_map.items()},
        model.attaching_cycle.render(),
        model.cycle_degree,
        [
            (sign, model.name(first), model.name(second))
            for sign, first, second in model.attaching_terms()
        ],
        check_d_squared(presentation).passed,
    )


def whitehead_model(
    dimensions: list[int], truncation: int | None = None, output: str | None = None
) -> ModelData:
    model = build_model(dimensions, truncation)
    if output is not None:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(serialize_presentation(document_from_dgl(model.presentation)))
        _LOGGER.info("Model written to %s", output)
    return model_data(model)


def start():
    """Entrypoint."""
    parser = base_parser("Build the Lie model of a fat wedge of spheres")
    parser.add_argument(
        "--dims", type=str, required=True, help="Sphere dimensions, e.g. 3,3,3,3"
    )
    parser.add_argument("-t", "--truncation", type=int, help="Degree truncation")
    parser.add_argument("-o", "--output", type=str, help="Write the model as a DGL document")
    args = parser.parse_args()

    sys.exit(
        run(
            lambda: whitehead_model(integer_list(args.dims), args.truncation, args.output),
            args,
        )
    )
