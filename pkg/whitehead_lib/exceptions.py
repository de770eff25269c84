"""Exceptions raised by the kernel and the document layer."""


class WhiteheadLibError(Exception):
    """Base class of all library errors."""


class DegreeError(WhiteheadLibError):
    """A degree does not match what the construction requires."""


class TruncationError(DegreeError):
    """A computation needs degrees beyond the declared truncation."""


class UnknownGeneratorError(WhiteheadLibError):
    def __init__(self, name: str):
        super().__init__(f"Unknown generator '{name}'")
        self.name = name


class SignConventionError(WhiteheadLibError):
    """A built model fails d^2 = 0."""


class NotACycleError(WhiteheadLibError):
    pass


class NotABoundaryError(WhiteheadLibError):
    pass


class EmptyBracketSetError(WhiteheadLibError):
    pass


class PreconditionError(WhiteheadLibError):
    pass


class NonInvertibleFamilyError(WhiteheadLibError):
    pass


class DocumentError(WhiteheadLibError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DocumentValidationError(DocumentError):
    pass
