from enum import Enum, unique


@unique
class Cardinality(Enum):
    EMPTY = "empty"
    SINGLETON = "singleton"
    INFINITE = "infinite"
    UNDECIDED = "undecided"
