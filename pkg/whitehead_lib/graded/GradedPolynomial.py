from typing import Iterable, Mapping, Sequence

import sympy

from ..exceptions import UnknownGeneratorError
from .signs import koszul_sort

Word = tuple[str, ...]


def _normalize(coef) -> sympy.Expr:
    return sympy.cancel(sympy.sympify(coef))


class GradedPolynomial:
    """Element of a free graded-commutative algebra with symbolic coefficients.

    Monomials are ascending words of generator names (a generator repeated
    once per power); odd generators never repeat. Coefficients are sympy
    expressions kept in cancelled form.
    """

    def __init__(
        self,
        degrees: Mapping[str, int],
        order: Sequence[str],
        terms: Mapping[Word, object] | None = None,
    ):
        self.degrees = dict(degrees)
        self.order = tuple(order)
        self._position = {name: index for index, name in enumerate(self.order)}
        self.terms: dict[Word, sympy.Expr] = {}
        for word, coef in (terms or {}).items():
            self.add_word(word, coef)

    def _empty(self) -> "GradedPolynomial":
        result = GradedPolynomial.__new__(GradedPolynomial)
        result.degrees = self.degrees
        result.order = self.order
        result._position = self._position
        result.terms = {}
        return result

    def add_word(self, word: Iterable[str], coef=1) -> "GradedPolynomial":
        """Add coef * (product of the word's generators in the given order)."""
        word = tuple(word)
        for name in word:
            if name not in self._position:
                raise UnknownGeneratorError(name)
        sorted_word, sign = koszul_sort(
            word, key=self._position.__getitem__, degree=self.degrees.__getitem__
        )
        if sign == 0:
            return self
        total = _normalize(self.terms.get(sorted_word, 0) + sign * sympy.sympify(coef))
        if total == 0:
            self.terms.pop(sorted_word, None)
        else:
            self.terms[sorted_word] = total
        return self

    def generator(self, name: str, coef=1) -> "GradedPolynomial":
        return self._empty().add_word((name,), coef)

    def constant(self, coef) -> "GradedPolynomial":
        return self._empty().add_word((), coef)

    def word_degree(self, word: Word) -> int:
        return sum(self.degrees[name] for name in word)

    def degree(self) -> int | None:
        degrees = {self.word_degree(word) for word in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Iterable[str]) -> sympy.Expr:
        sorted_word, sign = koszul_sort(
            tuple(word), key=self._position.__getitem__, degree=self.degrees.__getitem__
        )
        if sign == 0:
            return sympy.Integer(0)
        return sign * self.terms.get(sorted_word, sympy.Integer(0))

    def word_lengths(self) -> set[int]:
        return {len(word) for word in self.terms}

    def word_length_part(self, length: int) -> "GradedPolynomial":
        result = self._empty()
        result.terms = {w: c for w, c in self.terms.items() if len(w) == length}
        return result

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        result = self._empty()
        result.terms = dict(self.terms)
        for word, coef in other.terms.items():
            result.add_word(word, coef)
        return result

    def __neg__(self) -> "GradedPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def scale(self, scalar) -> "GradedPolynomial":
        result = self._empty()
        for word, coef in self.terms.items():
            result.add_word(word, coef * sympy.sympify(scalar))
        return result

    def __mul__(self, other) -> "GradedPolynomial":
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        result = self._empty()
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result.add_word(left + right, a * b)
        return result

    def __rmul__(self, scalar) -> "GradedPolynomial":
        return self.scale(scalar)

    def __pow__(self, exponent: int) -> "GradedPolynomial":
        result = self.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def substitute(self, images: Mapping[str, "GradedPolynomial"]) -> "GradedPolynomial":
        """Apply the algebra map sending each generator to its image."""
        result = self._empty()
        for word, coef in self.terms.items():
            term = self.constant(coef)
            for name in word:
                term = term * (images[name] if name in images else self.generator(name))
            result = result + term
        return result

    def apply_derivation(
        self, images: Mapping[str, "GradedPolynomial"], derivation_degree: int = 1
    ) -> "GradedPolynomial":
        """Extend a map on generators to a derivation of the given degree."""
        result = self._empty()
        for word, coef in self.terms.items():
            passed = 0
            for index, name in enumerate(word):
                image = images.get(name)
                if image is not None and not image.is_zero():
                    sign = -1 if (passed * derivation_degree) & 1 else 1
                    left = self._empty().add_word(word[:index], sign * coef)
                    right = self._empty().add_word(word[index + 1 :])
                    result = result + left * image * right
                passed += self.degrees[name]
        return result

    def free_symbols(self) -> set:
        symbols = set()
        for coef in self.terms.values():
            symbols |= coef.free_symbols
        return symbols

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for word in sorted(self.terms, key=lambda w: (len(w), [self._position[n] for n in w])):
            pieces.append(_render_term(self.terms[word], word))
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text

    def __repr__(self):
        return f"GradedPolynomial({self.render()})"


def _render_word(word: Word) -> str:
    factors = []
    index = 0
    while index < len(word):
        name = word[index]
        power = 1
        while index + power < len(word) and word[index + power] == name:
            power += 1
        factors.append(name if power == 1 else f"{name}^{power}")
        index += power
    return "*".join(factors)


def _render_term(coef: sympy.Expr, word: Word) -> str:
    monomial = _render_word(word)
    if not monomial:
        return _render_scalar(coef)
    if coef == 1:
        return monomial
    if coef == -1:
        return f"-{monomial}"
    return f"{_render_scalar(coef)}*{monomial}"


def _render_scalar(coef: sympy.Expr) -> str:
    if coef.is_Rational:
        return str(coef)
    text = sympy.sstr(coef).replace("**", "^")
    if coef.is_Add:
        return f"({text})"
    return text
