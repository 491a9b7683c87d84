"""Exception hierarchy.

Every error carries a stable ``kind`` string so the command line front end
can report it in machine-readable form.
"""


class HigherToddError(Exception):
    kind = "Error"


class DomainError(HigherToddError):
    """Mathematically meaningless request (exit code 3 on the command line)."""

    kind = "DomainError"


class UsageError(HigherToddError):
    kind = "UsageError"


# kernel

class AlgebraMismatch(DomainError):
    kind = "AlgebraMismatch"


class DegreeOutOfRange(DomainError):
    kind = "DegreeOutOfRange"


class NoFundamentalClass(DomainError):
    kind = "NoFundamentalClass"


class InvalidPresentation(DomainError):
    kind = "InvalidPresentation"


class TooLarge(DomainError):
    kind = "TooLarge"


# series and genera

class SeriesNotUnital(DomainError):
    kind = "SeriesNotUnital"


class SeriesNotNilpotent(DomainError):
    kind = "SeriesNotNilpotent"


class NotATotalClass(DomainError):
    kind = "NotATotalClass"


class UnknownPiClass(DomainError):
    kind = "UnknownPiClass"


class ExprError(UsageError):
    kind = "ExprError"


# varieties

class UnsupportedDimension(DomainError):
    kind = "UnsupportedDimension"


class TransportError(DomainError):
    kind = "TransportError"


class CorrespondenceError(DomainError):
    kind = "CorrespondenceError"


# bordism

class NotInvariant(DomainError):
    kind = "NotInvariant"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# input language

class ParseError(UsageError):
    kind = "ParseError"

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
