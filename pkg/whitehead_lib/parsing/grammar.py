"""pyparsing grammar for Lie and polynomial expressions.

Lie expressions are signed sums of terms ``[q*]atom`` where an atom is a
generator, a bracket ``[e1, e2]`` or a parenthesised expression; ``0`` is the
empty sum. Polynomial expressions are signed sums of ``[q*]x^2*y`` monomials
or rational constants. Scalars are integers or ``p/q``.
"""

from fractions import Fraction

import pyparsing as pp

from ..exceptions import DocumentSyntaxError
from ..free_lie import LieExpr
from ..utils.rationals import parse_rational


class PolynomialTerm:
    __slots__ = ("word", "coefficient")

    def __init__(self, word: tuple[str, ...], coefficient: Fraction):
        self.word = word
        self.coefficient = coefficient

    def __repr__(self):
        return f"PolynomialTerm({self.word}, {self.coefficient})"


RATIONAL = pp.Regex(r"\d+(?:/\d+)?").setParseAction(lambda t: parse_rational(t[0]))
NAME = pp.Word(pp.alphas, pp.alphanums + "_")
SIGN = pp.oneOf("+ -")


def _signed_sum(tokens, zero):
    total = zero
    for index in range(0, len(tokens), 2):
        term = tokens[index + 1]
        total = total - term if tokens[index] == "-" else total + term
    return total


def _lie_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    bracket = pp.Suppress("[") + expr + pp.Suppress(",") + expr + pp.Suppress("]")
    bracket.setParseAction(lambda t: LieExpr.bracket(t[0], t[1]))
    name = NAME.copy().setParseAction(lambda t: LieExpr.generator(t[0]))
    group = pp.Suppress("(") + expr + pp.Suppress(")")
    atom = bracket | name | group
    scaled = (RATIONAL + pp.Optional(pp.Suppress("*")) + atom).setParseAction(
        lambda t: t[1] * t[0]
    )
    zero = pp.Literal("0").setParseAction(lambda t: LieExpr.zero())
    term = scaled | atom | zero
    signed = pp.Optional(SIGN, "+") + term + pp.ZeroOrMore(SIGN + term)
    expr <<= signed.setParseAction(lambda t: _signed_sum(t, LieExpr.zero()))
    return expr


def _monomial(tokens) -> tuple[str, ...]:
    word = []
    for name, power in tokens:
        word.extend([name] * power)
    return tuple(word)


def _polynomial_grammar() -> pp.ParserElement:
    power = pp.Optional(pp.Suppress("^") + pp.Word(pp.nums), "1")
    factor = (NAME + power).setParseAction(lambda t: [(t[0], int(t[1]))])
    monomial = (factor + pp.ZeroOrMore(pp.Suppress("*") + factor)).setParseAction(
        lambda t: PolynomialTerm(_monomial(t), Fraction(1))
    )
    scaled = (RATIONAL + pp.Optional(pp.Suppress("*") + monomial)).setParseAction(
        lambda t: PolynomialTerm(t[1].word if len(t) > 1 else (), t[0])
    )
    term = scaled | monomial
    signed = pp.Optional(SIGN, "+") + term + pp.ZeroOrMore(SIGN + term)

    def _collect(tokens):
        terms = []
        for index in range(0, len(tokens), 2):
            term = tokens[index + 1]
            sign = -1 if tokens[index] == "-" else 1
            terms.append(PolynomialTerm(term.word, sign * term.coefficient))
        return tuple(terms)

    return signed.setParseAction(_collect)


LIE_EXPRESSION = _lie_grammar()
POLYNOMIAL_EXPRESSION = _polynomial_grammar()


def _parse(grammar: pp.ParserElement, text: str):
    try:
        return grammar.parseString(text, parseAll=True)[0]
    except pp.ParseException as err:
        raise DocumentSyntaxError(f"Cannot parse '{text}': {err.msg}", err.lineno, err.col)


def parse_lie_expression(text: str) -> LieExpr:
    return _parse(LIE_EXPRESSION, text)


def parse_polynomial(text: str) -> list[PolynomialTerm]:
    return list(_parse(POLYNOMIAL_EXPRESSION, text))


def parse_linear_combination(text: str) -> dict[str, Fraction]:
    """A Lie expression without brackets, as name -> coefficient."""
    expr = parse_lie_expression(text)
    for tree in expr.terms:
        if not isinstance(tree, str):
            raise DocumentSyntaxError(f"Expected a linear combination, got '{text}'", 1, 1)
    return dict(expr.terms)
