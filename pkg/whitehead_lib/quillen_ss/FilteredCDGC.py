import logging

from ..dgl.DGLPresentation import DGLPresentation
from ..exceptions import DegreeError, TruncationError
from ..graded import GradedVector
from ..linf.Coderivation import Coderivation
from ..linf.correspondence import brackets_to_coderivation
from ..linf.exterior import Word
from ..linf.LInfStructure import LInfStructure
from ..linf.quillen_chains import quillen_chains


class SpectralSequenceConfig:
    def __init__(self, max_degree: int, max_length: int | None = None):
        self.max_degree = max_degree
        self.max_length = max_length


class FilteredCDGC:
    """Reduced Quillen chains filtered by word length, within a degree bound.

    Words of total degree up to ``max_degree`` (and length up to
    ``max_length`` when given) are enumerated completely.
    """

    def __init__(
        self,
        coderivation: Coderivation,
        config: SpectralSequenceConfig,
    ):
        self.coderivation = coderivation
        self.config = config
        self.logger = logging.getLogger(__name__)
        words = coderivation.words
        if config.max_length is None and any(d <= 0 for d in words.suspended.values()):
            raise DegreeError(
                "A basis with non-positive suspended degrees needs a word length bound"
            )
        self._words: dict[int, list[Word]] = {}
        for word in words.words(
            max_degree=config.max_degree, max_length=config.max_length, min_length=1
        ):
            self._words.setdefault(words.degree(word), []).append(word)
        self.logger.debug(
            "Filtered chains: %d words up to degree %d",
            sum(len(w) for w in self._words.values()),
            config.max_degree,
        )

    @classmethod
    def from_structure(
        cls, structure: LInfStructure, config: SpectralSequenceConfig
    ) -> "FilteredCDGC":
        return cls(brackets_to_coderivation(structure), config)

    @classmethod
    def from_dgl(
        cls, presentation: DGLPresentation, config: SpectralSequenceConfig
    ) -> "FilteredCDGC":
        chains = quillen_chains(presentation, config.max_degree)
        return cls(chains.coderivation, config)

    @property
    def max_degree(self) -> int:
        return self.config.max_degree

    @property
    def max_length(self) -> int | None:
        return self.config.max_length

    def degrees(self) -> list[int]:
        return sorted(self._words)

    def words(self, degree: int) -> list[Word]:
        if degree > self.max_degree:
            raise TruncationError(
                f"Degree {degree} exceeds the chain truncation {self.max_degree}"
            )
        return self._words.get(degree, [])

    def top_length(self, degree: int) -> int:
        return max((len(word) for word in self.words(degree)), default=0)

    def filtration_words(self, p: int, degree: int) -> list[Word]:
        if self.max_length is not None and p > self.max_length:
            raise TruncationError(
                f"Filtration {p} exceeds the word length bound {self.max_length}"
            )
        return [word for word in self.words(degree) if len(word) <= p]

    def differential(self, vector: dict) -> GradedVector:
        return self.coderivation.apply(vector)

    def word_differential(self, word: Word) -> GradedVector:
        return self.coderivation.apply_word(word)


def filtration_subspace(chains: FilteredCDGC, p: int, degree: int) -> list[GradedVector]:
    """Basis of F_p in one total degree: the words of length at most p."""
    return [GradedVector({word: 1}, degree=degree) for word in chains.filtration_words(p, degree)]
