"""Exception types shared across the package.

Every domain error carries a short machine-readable ``code`` that the CLI
reports as ``{"error": code, "detail": ...}``.
"""


class PathSetError(Exception):
    code = "PathSetError"


class StructuralError(PathSetError, ValueError):
    """Malformed presentation: dangling vertex id, label outside the alphabet, ..."""

    code = "StructuralError"


class NotPIntegral(PathSetError, ValueError):
    code = "NotPIntegral"


class NotCoprime(PathSetError, ValueError):
    code = "NotCoprime"


class PMismatch(PathSetError, ValueError):
    code = "PMismatch"


class EmptySet(PathSetError):
    code = "EmptySet"


class NotSingleton(PathSetError):
    code = "NotSingleton"


class EnumerationTooLarge(PathSetError):
    code = "EnumerationTooLarge"


class NumericalFailure(PathSetError, ArithmeticError):
    code = "NumericalFailure"

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class BoundViolation(PathSetError, AssertionError):
    """A construction exceeded a carry or state-count bound it is proved to respect."""

    code = "BoundViolation"
