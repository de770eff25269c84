from ..exceptions import DegreeError
from .degrees import Degree
from .GradedVector import GradedVector


class Suspension:
    """Degree shift s (+1) or s^-1 (-1); symbols keep their names."""

    def __init__(self, shift: int = 1):
        if shift not in (1, -1):
            raise DegreeError(f"Suspension shift must be +1 or -1, got {shift}")
        self.shift = shift

    def degree(self, degree: Degree) -> Degree:
        return degree + self.shift

    def inverse(self) -> "Suspension":
        return Suspension(-self.shift)

    def vector(self, vector: GradedVector) -> GradedVector:
        result = vector.copy()
        if vector.degree is not None:
            result.degree = vector.degree + self.shift
        return result

    def __eq__(self, other):
        return isinstance(other, Suspension) and other.shift == self.shift

    def __hash__(self):
        return hash(self.shift)

    def __repr__(self):
        return "s" if self.shift == 1 else "s^-1"


SUSPEND = Suspension(1)
DESUSPEND = Suspension(-1)
