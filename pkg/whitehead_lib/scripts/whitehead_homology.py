"""Whitehead homology command."""

import sys

from ..dgl import homology
from ..parsing import PresentationDocument, load_presentation, to_dgl
from .common import base_parser, run
from .types import HomologyData


def homology_of_document(document: PresentationDocument, degree: int) -> HomologyData:
    basis = homology(to_dgl(document), degree)
    return HomologyData(
        degree,
        basis.dimension,
        {name: rep.render() for name, rep in zip(basis.names, basis.representatives)},
        basis.cycle_dimension,
        basis.boundary_rank,
    )


def start():
    """Entrypoint."""
    parser = base_parser("Homology of a DGL document in one degree")
    parser.add_argument("file", type=str, help="DGL presentation document (JSON)")
    parser.add_argument("-d", "--degree", type=int, required=True, help="Degree")
    args = parser.parse_args()

    sys.exit(run(lambda: homology_of_document(load_presentation(args.file), args.degree), args))
