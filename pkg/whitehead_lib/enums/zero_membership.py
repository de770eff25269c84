from enum import Enum, unique


@unique
class ZeroMembership(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"
