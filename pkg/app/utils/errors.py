"""
Exception hierarchy shared by the library, the CLI and the HTTP API
"""

from typing import Iterable, Optional

from fastapi import status

USAGE_EXIT = 2
EVALUATION_EXIT = 3


class CubicFieldsError(Exception):
    """Base error; carries the CLI exit code and the HTTP status for its class"""

    exit_code: int = EVALUATION_EXIT
    status_code: int = status.HTTP_422_UNPROCESSABLE_ENTITY

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__


class UsageError(CubicFieldsError):
    """Input violates an operation precondition"""

    exit_code = USAGE_EXIT
    status_code = status.HTTP_400_BAD_REQUEST


# precision_core
class DegenerateAngle(UsageError):
    pass


# cubic_poly
class InvalidScale(UsageError):
    pass


class NotAnRcp(UsageError):
    pass


class DegenerateGamma(UsageError):
    pass


class NotCubic(UsageError):
    pass


# roots
class NotThreeRealRoots(CubicFieldsError):
    pass


class PoleOfTransform(CubicFieldsError):
    pass


class AmbiguousMatch(CubicFieldsError):
    pass


# gaussian
class NotPrime(UsageError):
    pass


class NoCubicCosets(UsageError):
    pass


class NotShanksPrime(UsageError):
    pass


class NotLehmerCase(UsageError):
    pass


# identities
class UnknownIdentity(UsageError):
    pass


class EvaluationDomainError(CubicFieldsError):
    pass


# sequences
class PrecisionExhausted(CubicFieldsError):
    pass


# cli
class ParseError(UsageError):
    def __init__(self, offset: int, expected: Iterable[str], found: Optional[str] = None):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        what = f"'{found}'" if found else "end of input"
        super().__init__(
            f"syntax error at offset {offset}: expected one of {', '.join(self.expected)}, found {what}"
        )


class InvalidSequenceId(UsageError):
    pass


class OfflineMiss(CubicFieldsError):
    pass


class BFileFormatError(CubicFieldsError):
    pass
