"""Levytree error handling module."""

from .exceptions import (
    ConfigError,
    DomainError,
    InputError,
    LevyTreeError,
    PathFormatError,
    PrecisionError,
    RejectionBudgetExceeded,
    ResourceError,
    RetryableError,
    StepBudgetExceeded,
)
from .schemas import ErrorSchema
from .transform import (
    EXIT_FAIL,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_PASS,
    exit_code_for,
    get_error_schema,
    get_exception_details,
)

__all__ = [
    "EXIT_FAIL",
    "EXIT_INPUT_ERROR",
    "EXIT_INTERNAL_ERROR",
    "EXIT_PASS",
    "ConfigError",
    "DomainError",
    "ErrorSchema",
    "InputError",
    "LevyTreeError",
    "PathFormatError",
    "PrecisionError",
    "RejectionBudgetExceeded",
    "ResourceError",
    "RetryableError",
    "StepBudgetExceeded",
    "exit_code_for",
    "get_error_schema",
    "get_exception_details",
]
