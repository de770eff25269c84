REPORT_SCHEMA = "whitehead-lib/report/1"
DOCUMENT_SCHEMA = "whitehead-lib/document/1"

PARAMETER_PREFIX = "lam"
MODEL_GENERATOR_PREFIX = "u"
HOMOLOGY_CLASS_PREFIX = "H"

DEFAULT_SEARCH_BOUND = 20
DEFAULT_SEARCH_BUDGET = 4000
DEFAULT_JACOBI_ARITY = 4

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_UNDECIDED = 3
