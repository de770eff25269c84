"""Reading, validating and writing presentation documents (JSON)."""

import json
import logging
import re
from fractions import Fraction

from ..dgl import DGLPresentation
from ..enums import DocumentKind
from ..exceptions import DocumentSyntaxError, DocumentValidationError, UnknownGeneratorError
from ..free_lie import GeneratorSet, LieExpr
from ..graded import GradedPolynomial
from ..linf import LInfStructure
from ..quillen_ss import SpectralSequenceConfig
from ..sullivan import SullivanAlgebraPresentation
from ..whitehead import ClassifyConfig, ExtensionConfig
from .grammar import parse_lie_expression, parse_linear_combination, parse_polynomial
from .PresentationDocument import PresentationDocument

_LOGGER = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_KEYS = {
    DocumentKind.DGL: {"kind", "generators", "differential", "truncation", "options"},
    DocumentKind.LINF: {"kind", "generators", "brackets", "truncation", "options"},
    DocumentKind.CDGA: {"kind", "generators", "differential", "order", "options"},
}


def _kind(data: dict) -> DocumentKind:
    try:
        return DocumentKind(data.get("kind"))
    except ValueError:
        raise DocumentValidationError(
            f"'kind' must be one of {[k.value for k in DocumentKind]}, got {data.get('kind')!r}"
        )


def _generators(data: dict) -> list[tuple[str, int]]:
    raw = data.get("generators", [])
    if not isinstance(raw, list):
        raise DocumentValidationError("'generators' must be a list of [name, degree] pairs")
    generators = []
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not isinstance(entry[0], str)
            or not isinstance(entry[1], int)
            or isinstance(entry[1], bool)
        ):
            raise DocumentValidationError(f"Bad generator entry {entry!r}")
        if not _NAME.match(entry[0]):
            raise DocumentValidationError(f"Bad generator name '{entry[0]}'")
        generators.append((entry[0], entry[1]))
    names = [name for name, _ in generators]
    if len(set(names)) != len(names):
        raise DocumentValidationError("Generator names must be unique")
    return generators


def _lie_differential(data: dict, degrees: dict) -> dict[str, LieExpr]:
    parsed = {}
    for name, text in data.get("differential", {}).items():
        if name not in degrees:
            raise UnknownGeneratorError(name)
        parsed[name] = parse_lie_expression(str(text))
    return parsed


def _polynomials(
    data: dict, generators: list[tuple[str, int]], order: list[str]
) -> dict[str, GradedPolynomial]:
    degrees = dict(generators)
    parsed = {}
    for name, text in data.get("differential", {}).items():
        if name not in degrees:
            raise UnknownGeneratorError(name)
        value = GradedPolynomial(degrees, order)
        for term in parse_polynomial(str(text)):
            value.add_word(term.word, term.coefficient)
        parsed[name] = value
    return parsed


def _brackets(data: dict, degrees: dict) -> dict[int, dict[tuple[str, ...], dict[str, Fraction]]]:
    raw = data.get("brackets", {})
    if not isinstance(raw, dict):
        raise DocumentValidationError("'brackets' must map arities to tables")
    tables = {}
    for arity_text, table in raw.items():
        try:
            arity = int(arity_text)
        except ValueError:
            raise DocumentValidationError(f"Bad arity '{arity_text}'")
        if arity < 1 or not isinstance(table, dict):
            raise DocumentValidationError(f"Bad bracket table for arity {arity_text}")
        parsed = {}
        for key, text in table.items():
            args = tuple(part.strip() for part in key.split(","))
            if len(args) != arity:
                raise DocumentValidationError(f"'{key}' does not have {arity} arguments")
            for name in args:
                if name not in degrees:
                    raise UnknownGeneratorError(name)
            parsed[args] = parse_linear_combination(str(text))
        tables[arity] = parsed
    return tables


def parse_presentation(text: str) -> PresentationDocument:
    """Parse and validate a document; every degree gate runs here."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentSyntaxError(err.msg, err.lineno, err.colno)
    if not isinstance(data, dict):
        raise DocumentValidationError("A presentation document must be a JSON object")
    kind = _kind(data)
    unknown = set(data) - _KEYS[kind]
    if unknown:
        raise DocumentValidationError(f"Unexpected keys for a {kind.value} document: {sorted(unknown)}")
    generators = _generators(data)
    degrees = dict(generators)
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise DocumentValidationError("'options' must be an object")
    truncation = data.get("truncation")
    if truncation is not None and (not isinstance(truncation, int) or isinstance(truncation, bool)):
        raise DocumentValidationError("'truncation' must be an integer")
    document = PresentationDocument(kind, generators, truncation=truncation, options=options)

    if kind == DocumentKind.DGL:
        if document.truncation is None:
            document.truncation = max(degrees.values(), default=0)
        differential = _lie_differential(data, degrees)
        DGLPresentation(GeneratorSet(generators, document.truncation), differential)
        document.differential = {
            name: differential[name].render() for name in degrees if name in differential
        }
    elif kind == DocumentKind.LINF:
        tables = _brackets(data, degrees)
        structure = LInfStructure(generators, tables)
        document.brackets = {
            arity: {args: LieExpr(value).render() for args, value in table.items()}
            for arity, table in tables.items()
        }
        _LOGGER.debug("Parsed %r", structure)
    else:
        order = data.get("order")
        if order is not None:
            if not isinstance(order, list) or sorted(order) != sorted(degrees):
                raise DocumentValidationError("'order' must list every generator once")
            document.order = list(order)
        algebra = SullivanAlgebraPresentation(generators, order=document.order)
        differential = _polynomials(data, generators, list(algebra.order))
        for name, value in differential.items():
            algebra.set_differential(name, value)
        document.differential = {
            name: differential[name].render() for name in algebra.order if name in differential
        }
    return document


def load_presentation(path: str) -> PresentationDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_presentation(handle.read())


def serialize_presentation(document: PresentationDocument) -> str:
    return json.dumps(document.toJSON(), indent=2, ensure_ascii=False) + "\n"


def to_dgl(document: PresentationDocument) -> DGLPresentation:
    _require(document, DocumentKind.DGL)
    differential = {
        name: parse_lie_expression(text) for name, text in document.differential.items()
    }
    return DGLPresentation(GeneratorSet(document.generators, document.truncation), differential)


def to_linf(document: PresentationDocument) -> LInfStructure:
    _require(document, DocumentKind.LINF)
    tables = {
        arity: {args: parse_linear_combination(text) for args, text in table.items()}
        for arity, table in document.brackets.items()
    }
    return LInfStructure(document.generators, tables)


def to_cdga(document: PresentationDocument) -> SullivanAlgebraPresentation:
    _require(document, DocumentKind.CDGA)
    algebra = SullivanAlgebraPresentation(document.generators, order=document.order)
    for name, value in _polynomials(
        {"differential": document.differential}, document.generators, list(algebra.order)
    ).items():
        algebra.set_differential(name, value)
    return algebra


def build_presentation(document: PresentationDocument):
    builders = {
        DocumentKind.DGL: to_dgl,
        DocumentKind.LINF: to_linf,
        DocumentKind.CDGA: to_cdga,
    }
    return builders[document.kind](document)


def _require(document: PresentationDocument, kind: DocumentKind) -> None:
    if document.kind != kind:
        raise DocumentValidationError(
            f"Expected a {kind.value} document, got {document.kind.value}"
        )


def extension_config(document: PresentationDocument) -> ExtensionConfig:
    options = document.options
    return ExtensionConfig(
        fresh_parameters=options.get("fresh_parameters", "homology"),
        check_cycles=bool(options.get("check_cycles", True)),
    )


def classify_config(document: PresentationDocument) -> ClassifyConfig:
    config = ClassifyConfig()
    for key in ("search_bound", "search_budget"):
        if key in document.options:
            setattr(config, key, int(document.options[key]))
    return config


def spectral_sequence_config(
    document: PresentationDocument, max_degree: int | None = None
) -> SpectralSequenceConfig:
    options = document.options
    degree = max_degree if max_degree is not None else options.get("max_degree")
    if degree is None:
        raise DocumentValidationError("No maximal degree given for the spectral sequence")
    return SpectralSequenceConfig(int(degree), options.get("max_length"))


def document_from_dgl(presentation: DGLPresentation, options: dict | None = None) -> PresentationDocument:
    return PresentationDocument(
        DocumentKind.DGL,
        list(presentation.generators.generators),
        differential={
            name: presentation.differential_map[name].render()
            for name in presentation.generators.names
            if name in presentation.differential_map
        },
        truncation=presentation.truncation,
        options=dict(options or {}),
    )


def document_from_linf(structure: LInfStructure, options: dict | None = None) -> PresentationDocument:
    return PresentationDocument(
        DocumentKind.LINF,
        list(structure.basis),
        brackets={
            arity: {args: LieExpr(dict(value)).render() for args, value in structure.table(arity).items()}
            for arity in structure.arities()
        },
        options=dict(options or {}),
    )


def document_from_cdga(
    algebra: SullivanAlgebraPresentation, options: dict | None = None
) -> PresentationDocument:
    return PresentationDocument(
        DocumentKind.CDGA,
        list(algebra.generators),
        differential={
            name: value.render()
            for name in algebra.order
            if not (value := algebra.d(name)).is_zero()
        },
        order=list(algebra.order),
        options=dict(options or {}),
    )
