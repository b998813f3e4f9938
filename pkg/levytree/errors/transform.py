"""Turn exceptions into error payloads and process exit codes."""

from pydantic import ValidationError

from levytree.errors.exceptions import (
    DomainError,
    InputError,
    LevyTreeError,
    PrecisionError,
    ResourceError,
    RetryableError,
)
from levytree.errors.schemas import (
    DomainErrorSchema,
    ErrorSchema,
    InputErrorSchema,
    InternalErrorSchema,
    PrecisionErrorSchema,
    ResourceErrorSchema,
    RetryableErrorSchema,
)
from levytree.types import DictStrAny

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def transform_validation_error(exc: ValidationError) -> list[DictStrAny]:
    """Flatten a pydantic validation error into loc/msg/type rows."""
    return [
        {
            "loc": list(error["loc"]),
            "msg": error["msg"],
            "type": error["type"],
        }
        for error in exc.errors()
    ]


def get_exception_details(exc: Exception | None) -> str | list[DictStrAny] | None:
    """Return the detail part of an error payload."""
    if isinstance(exc, ValidationError):
        return transform_validation_error(exc)
    if exc is not None:
        return str(exc)
    return None


def get_error_schema(exc: Exception) -> ErrorSchema:
    """Return the error payload for an exception."""
    detail = get_exception_details(exc)
    # order matters: PrecisionError is a DomainError
    if isinstance(exc, PrecisionError):
        return PrecisionErrorSchema(detail=detail)
    if isinstance(exc, DomainError):
        return DomainErrorSchema(detail=detail)
    if isinstance(exc, InputError | ValidationError | FileNotFoundError):
        return InputErrorSchema(detail=detail)
    if isinstance(exc, ResourceError):
        return ResourceErrorSchema(detail=detail)
    if isinstance(exc, RetryableError):
        return RetryableErrorSchema(detail=detail)
    if isinstance(exc, LevyTreeError):
        return ErrorSchema(code=exc.code, message=str(exc))
    return InternalErrorSchema(detail=detail)


def exit_code_for(exc: Exception) -> int:
    """Map an exception to the command line exit code."""
    if isinstance(
        exc,
        DomainError | InputError | ResourceError | ValidationError | FileNotFoundError,
    ):
        return EXIT_INPUT_ERROR
    if isinstance(exc, RetryableError):
        return EXIT_FAIL
    return EXIT_INTERNAL_ERROR
