from enum import Enum, unique


@unique
class DocumentKind(Enum):
    DGL = "dgl"
    LINF = "linf"
    CDGA = "cdga"
