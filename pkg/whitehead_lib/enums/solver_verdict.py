from enum import Enum, unique


@unique
class SolverVerdict(Enum):
    NO_SOLUTION = "no_solution"
    SOLVABLE = "solvable"
    UNDECIDED = "undecided"
