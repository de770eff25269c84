from fractions import Fraction
from typing import Mapping

import sympy

from ..graded import GradedVector
from ..utils.polynomials import (
    ONE,
    Monomial,
    evaluate_monomial,
    monomial_mul,
    monomial_variables,
    symbol,
)
from ..utils.rationals import to_sympy


class ParamElement:
    """Homogeneous element whose coefficients are polynomials in parameters.

    Stored as monomial -> vector, the vectors living in one graded piece of
    the ambient algebra.
    """

    def __init__(
        self,
        terms: Mapping[Monomial, GradedVector] | None = None,
        degree: int | None = None,
    ):
        self.degree = degree
        self.terms: dict[Monomial, GradedVector] = {}
        for m, vector in (terms or {}).items():
            self.add_vector(m, vector)

    @classmethod
    def constant(cls, vector: dict, degree: int) -> "ParamElement":
        return cls({ONE: GradedVector(vector, degree=degree)}, degree)

    @classmethod
    def parameter(cls, name: str, vector: dict, degree: int) -> "ParamElement":
        return cls({symbol(name): GradedVector(vector, degree=degree)}, degree)

    def add_vector(self, m: Monomial, vector: dict, coef=1) -> "ParamElement":
        current = self.terms.get(m)
        if current is None:
            current = GradedVector(degree=self.degree)
        current.iadd_scaled(coef, vector)
        if current.is_zero():
            self.terms.pop(m, None)
        else:
            self.terms[m] = current
        return self

    def copy(self) -> "ParamElement":
        return ParamElement({m: v.copy() for m, v in self.terms.items()}, self.degree)

    def __add__(self, other: "ParamElement") -> "ParamElement":
        result = self.copy()
        if result.degree is None:
            result.degree = other.degree
        for m, vector in other.terms.items():
            result.add_vector(m, vector)
        return result

    def __sub__(self, other: "ParamElement") -> "ParamElement":
        return self + other.scale(-1)

    def __neg__(self) -> "ParamElement":
        return self.scale(-1)

    def scale(self, scalar) -> "ParamElement":
        result = ParamElement(degree=self.degree)
        for m, vector in self.terms.items():
            result.add_vector(m, vector, scalar)
        return result

    def times_monomial(self, m: Monomial, coef=1) -> "ParamElement":
        result = ParamElement(degree=self.degree)
        for own, vector in self.terms.items():
            result.add_vector(monomial_mul(own, m), vector, coef)
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def parameters(self) -> set[str]:
        names: set[str] = set()
        for m in self.terms:
            names |= monomial_variables(m)
        return names

    def specialize(self, values: Mapping[str, Fraction]) -> GradedVector:
        result = GradedVector(degree=self.degree)
        for m, vector in self.terms.items():
            result.iadd_scaled(evaluate_monomial(m, values), vector)
        return result

    def coordinate_polynomials(self) -> dict:
        """Basis key -> sympy polynomial coefficient."""
        result: dict = {}
        for m, vector in self.terms.items():
            for key, coef in vector.items():
                result[key] = result.get(key, 0) + to_sympy(coef) * m
        return {
            key: sympy.expand(value)
            for key, value in result.items()
            if sympy.expand(value) != 0
        }

    def __eq__(self, other):
        if not isinstance(other, ParamElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"ParamElement({self.terms!r}, degree={self.degree})"


def map_vectors(element: ParamElement, function, degree: int | None) -> ParamElement:
    """Apply a linear map on vectors monomial by monomial."""
    result = ParamElement(degree=degree)
    for m, vector in element.terms.items():
        result.add_vector(m, function(vector))
    return result


def bilinear(
    left: ParamElement, right: ParamElement, function, degree: int | None
) -> ParamElement:
    result = ParamElement(degree=degree)
    for ml, vl in left.terms.items():
        for mr, vr in right.terms.items():
            result.add_vector(monomial_mul(ml, mr), function(vl, vr))
    return result
