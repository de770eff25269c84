from .cardinality import *
from .document_kind import *
from .formality_verdict import *
from .solver_verdict import *
from .zero_membership import *
