from fractions import Fraction

import sympy

from ..graded.GradedVector import to_fraction


def format_rational(value) -> str | int:
    """Integers stay integers, everything else renders as "p/q"."""
    value = to_fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str | int) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"Only integers and p/q rationals are accepted, got '{text}'")
    return Fraction(text)


def to_sympy(value) -> sympy.Rational:
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def sympy_to_fraction(value) -> Fraction:
    value = sympy.sympify(value)
    if not value.is_Rational:
        raise ValueError(f"{value} is not rational")
    return Fraction(int(value.p), int(value.q))
