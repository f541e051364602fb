"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and the process exit
status the CLI uses when it escapes a command.
"""


class NilcohomError(Exception):
    code = "ERROR"
    exit_status = 1


class UsageError(NilcohomError):
    code = "USAGE"
    exit_status = 2


class ValidationError(NilcohomError):
    code = "VALIDATION"
    exit_status = 3


class ParseError(ValidationError):
    code = "PARSE"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexOutOfRange(ValidationError):
    code = "INDEX_OUT_OF_RANGE"


class DuplicateEntry(ValidationError):
    code = "DUPLICATE_ENTRY"


class JacobiViolation(ValidationError):
    code = "JACOBI_VIOLATION"

    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        i, j, k = triple
        super().__init__(
            f"Jacobi identity fails on basis triple ({i}, {j}, {k}); "
            f"residual {[str(r) for r in residual]}"
        )


class NotNilpotent(ValidationError):
    code = "NOT_NILPOTENT"


class UnsupportedCenter(ValidationError):
    code = "UNSUPPORTED_CENTER"


class ZeroScaling(ValidationError):
    code = "ZERO_SCALING"


class InternalGradingInconsistency(NilcohomError):
    code = "INTERNAL_GRADING"


class InternalInconsistency(NilcohomError):
    code = "INTERNAL"


class UnknownFamily(UsageError):
    code = "UNKNOWN_FAMILY"


class DegreeOutOfRange(UsageError):
    code = "DEGREE_OUT_OF_RANGE"


class DegreeTooHigh(DegreeOutOfRange):
    code = "DEGREE_TOO_HIGH"


class MissingData(NilcohomError):
    code = "MISSING_DATA"
    exit_status = 4


class MissingDegree(MissingData):
    code = "MISSING_DEGREE"

    def __init__(self, j, hint=None):
        self.j = j
        msg = f"no filling degree supplied for j={j}"
        if hint:
            msg += f" ({hint})"
        super().__init__(msg)


class UnknownDegree(MissingData):
    code = "UNKNOWN_DEGREE"
