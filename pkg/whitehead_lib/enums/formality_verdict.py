from enum import Enum, unique


@unique
class FormalityVerdict(Enum):
    NOT_FORMAL_ZERO_CRITERION = "not_formal_1"
    NOT_FORMAL_CARDINALITY_CRITERION = "not_formal_2"
    INCONCLUSIVE = "inconclusive"
    UNDECIDED = "undecided"
