from fractions import Fraction
from typing import Callable, Hashable, Iterable

from .degrees import Degree


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Refusing inexact scalar {value!r}")


class GradedVector(dict):
    """Sparse exact-rational combination of basis symbols.

    Zero coefficients are never stored. ``degree`` is the common degree of
    all symbols, or None for an inhomogeneous vector.
    """

    def __init__(self, data=(), degree: Degree | None = None):
        super().__init__()
        self.degree = degree
        if isinstance(data, dict):
            data = data.items()
        for key, value in data:
            self.iadd_coef(key, value)

    def __getitem__(self, key):
        return self.get(key, Fraction(0))

    def copy(self) -> "GradedVector":
        result = GradedVector(degree=self.degree)
        dict.update(result, self)
        return result

    def iadd_coef(self, key: Hashable, value) -> "GradedVector":
        if value == 0:
            return self
        total = self.get(key, 0) + to_fraction(value)
        if total == 0:
            del self[key]
        else:
            dict.__setitem__(self, key, total)
        return self

    def iadd_scaled(self, coef, other: dict) -> "GradedVector":
        """self += coef * other"""
        if coef == 0:
            return self
        coef = to_fraction(coef)
        for key, value in other.items():
            self.iadd_coef(key, coef * value)
        return self

    def __iadd__(self, other: dict):
        return self.iadd_scaled(1, other)

    def __isub__(self, other: dict):
        return self.iadd_scaled(-1, other)

    def __add__(self, other: dict) -> "GradedVector":
        result = self.copy()
        result.iadd_scaled(1, other)
        result.degree = _merge_degree(self, other)
        return result

    def __sub__(self, other: dict) -> "GradedVector":
        result = self.copy()
        result.iadd_scaled(-1, other)
        result.degree = _merge_degree(self, other)
        return result

    def __neg__(self) -> "GradedVector":
        return self * -1

    def __mul__(self, scalar) -> "GradedVector":
        scalar = to_fraction(scalar)
        result = GradedVector(degree=self.degree)
        if scalar != 0:
            for key, value in self.items():
                dict.__setitem__(result, key, value * scalar)
        return result

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, dict):
            return dict.__eq__(self, other)
        if other == 0:
            return len(self) == 0
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def is_zero(self) -> bool:
        return len(self) == 0

    def map_keys(self, mapping: Callable[[Hashable], Hashable]) -> "GradedVector":
        result = GradedVector(degree=self.degree)
        for key, value in self.items():
            result.iadd_coef(mapping(key), value)
        return result

    def restrict(self, keep: Callable[[Hashable], bool]) -> "GradedVector":
        return GradedVector(
            ((k, v) for k, v in self.items() if keep(k)), degree=self.degree
        )

    def __repr__(self):
        return f"GradedVector({dict(self)!r}, degree={self.degree})"


def _merge_degree(a: dict, b: dict) -> Degree | None:
    da = getattr(a, "degree", None)
    db = getattr(b, "degree", None)
    if not a:
        return db
    if not b:
        return da
    return da if da == db else None


def linear_combination(
    pairs: Iterable[tuple[object, dict]], degree: Degree | None = None
) -> GradedVector:
    result = GradedVector(degree=degree)
    for coef, vector in pairs:
        result.iadd_scaled(coef, vector)
    return result
