"""
Error types raised by the kernel.

Every error carries a stable code (the key into config.ERRORS) and a rendered
detail message. None of them derive from ValueError, so pydantic validators
re-raise them unchanged.
"""

from typing import Any, Dict


class BoolFunError(Exception):
    """Base error with a stable code"""

    code = "InvalidInput"

    def __init__(self, **context: Any):
        from config import ERRORS
        self.context = context
        self.detail = ERRORS[self.code].format(**context)
        super().__init__(self.detail)

    def to_dict(self) -> Dict[str, str]:
        """Wire form used by the CLI and the MCP tools"""
        return {"error": self.code, "detail": self.detail}


class WrongLengthError(BoolFunError):
    code = "WrongLength"


class NonzeroEmptySetError(BoolFunError):
    code = "NonzeroEmptySet"


class SubsetOutOfRangeError(BoolFunError):
    code = "SubsetOutOfRange"


class ValueOverflowError(BoolFunError):
    code = "Overflow"


class EqualParametersError(BoolFunError):
    code = "EqualParameters"


class GroundSetTooLargeError(BoolFunError):
    code = "GroundSetTooLarge"


class MismatchedGroundSetsError(BoolFunError):
    code = "MismatchedGroundSets"


class NotARefinementError(BoolFunError):
    code = "NotARefinement"


class InvalidPartitionError(BoolFunError):
    code = "InvalidPartition"


class EmptyGroundSetError(BoolFunError):
    code = "EmptyGroundSet"


class EmptyVertexSetError(BoolFunError):
    code = "EmptyVertexSet"


class InvalidInstanceError(BoolFunError):
    code = "InvalidInstance"


class InvalidFieldError(BoolFunError):
    code = "InvalidField"


class NotAMatroidError(BoolFunError):
    code = "NotAMatroid"


class NotABasisError(BoolFunError):
    code = "NotABasis"


class EnumerationTooLargeError(BoolFunError):
    code = "EnumerationTooLarge"


class NotInBoolMaxError(BoolFunError):
    code = "NotInBoolMax"


class InvalidInputError(BoolFunError):
    code = "InvalidInput"
