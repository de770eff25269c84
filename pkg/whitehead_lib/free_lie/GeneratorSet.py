import logging
from typing import Iterable

from ..exceptions import DegreeError, TruncationError, UnknownGeneratorError

_LOGGER = logging.getLogger(__name__)


class GeneratorSet:
    def __init__(self, generators: Iterable[tuple[str, int]], truncation: int):
        self.generators = [(name, int(degree)) for name, degree in generators]
        self.degrees = dict(self.generators)
        if len(self.degrees) != len(self.generators):
            raise DegreeError("Generator names must be unique")
        if self.generators and truncation < max(self.degrees.values()):
            raise TruncationError(
                f"Truncation {truncation} below generator degree {max(self.degrees.values())}"
            )
        self.truncation = truncation
        self.names = [name for name, _ in self.generators]
        self._piece_cache: dict[tuple[int, int], list] = {}

    def __len__(self):
        return len(self.generators)

    def __contains__(self, name: str):
        return name in self.degrees

    def degree(self, name: str) -> int:
        if name not in self.degrees:
            raise UnknownGeneratorError(name)
        return self.degrees[name]

    def position(self, name: str) -> int:
        return self.names.index(name)

    def check_degree(self, degree: int) -> None:
        if degree > self.truncation:
            raise TruncationError(
                f"Degree {degree} exceeds truncation {self.truncation}"
            )

    def is_positive(self) -> bool:
        return all(degree > 0 for degree in self.degrees.values())

    def max_weight(self, degree: int) -> int:
        if not self.generators:
            return 0
        if not self.is_positive():
            raise DegreeError(
                "Degree pieces are only finite for positively graded generators"
            )
        return degree // min(self.degrees.values())
