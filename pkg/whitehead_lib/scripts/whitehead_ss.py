"""Whitehead spectral sequence command."""

import sys

from ..enums import DocumentKind
from ..exceptions import DocumentValidationError
from ..parsing import (
    PresentationDocument,
    load_presentation,
    spectral_sequence_config,
    to_dgl,
    to_linf,
)
from ..quillen_ss import FilteredCDGC, SpectralSequenceConfig, collapses_through, page
from ..utils.rationals import format_rational
from .common import base_parser, run
from .types import SpectralSequenceData


def _render_word(word: tuple[str, ...]) -> str:
    return "∧".join(f"s{name}" for name in word)


def spectral_sequence_of_document(
    document: PresentationDocument,
    k: int,
    max_degree: int | None = None,
    max_length: int | None = None,
) -> SpectralSequenceData:
    """E^k and whether every d^j with j >= k vanishes through ``max_degree``."""
    config = spectral_sequence_config(document, max_degree)
    top = config.max_degree
    chain_config = SpectralSequenceConfig(
        top + 1, max_length if max_length is not None else config.max_length
    )
    if document.kind == DocumentKind.DGL:
        chains = FilteredCDGC.from_dgl(to_dgl(document), chain_config)
    elif document.kind == DocumentKind.LINF:
        chains = FilteredCDGC.from_structure(to_linf(document), chain_config)
    else:
        raise DocumentValidationError("The spectral sequence needs a dgl or linf document")
    current = page(chains, k, top)
    collapse = collapses_through(chains, k, top)
    counterexample = None
    if collapse.counterexample is not None:
        j, p, degree, element = collapse.counterexample
        counterexample = {
            "page": j,
            "filtration": p,
            "degree": degree,
            "element": {_render_word(w): format_rational(c) for w, c in element.items()},
        }
    return SpectralSequenceData(
        k,
        collapse.certified_degree,
        {f"{p},{n}": dim for (p, n), dim in sorted(current.dimensions().items())},
        collapse.passed,
        collapse.checked_pages,
        counterexample,
    )


def start():
    """Entrypoint."""
    parser = base_parser("Quillen spectral sequence of a DGL or L-infinity document")
    parser.add_argument("file", type=str, help="Presentation document (JSON)")
    parser.add_argument("-k", "--page", type=int, default=2, help="Page index")
    parser.add_argument("-D", "--max-degree", type=int, help="Certify through this degree")
    parser.add_argument("-L", "--max-length", type=int, help="Word length bound")
    args = parser.parse_args()

    sys.exit(
        run(
            lambda: spectral_sequence_of_document(
                load_presentation(args.file), args.page, args.max_degree, args.max_length
            ),
            args,
        )
    )
