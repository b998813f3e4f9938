"""Test the error payloads and the exit codes of the command line."""

import pytest
from pydantic import BaseModel, ValidationError

from levytree.errors import (
    EXIT_FAIL,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    ConfigError,
    DomainError,
    InputError,
    LevyTreeError,
    PathFormatError,
    PrecisionError,
    RejectionBudgetExceeded,
    ResourceError,
    StepBudgetExceeded,
    exit_code_for,
    get_error_schema,
)


class _Point(BaseModel):
    x: int


def _validation_error() -> ValidationError:
    try:
        _Point.model_validate({"x": "nope"})
    except ValidationError as exc:
        return exc
    msg = "validation should have failed"
    raise AssertionError(msg)


@pytest.mark.parametrize(
    ("exc", "code"),
    [
        (PrecisionError("t = 0.3 is not a grid point"), "PrecisionError"),
        (DomainError("s outside [0, 1)"), "DomainError"),
        (InputError("bad value"), "InputError"),
        (ConfigError("grid must be at least 2"), "InputError"),
        (PathFormatError("line 3"), "InputError"),
        (FileNotFoundError("missing.txt"), "InputError"),
        (ResourceError("n too large"), "ResourceError"),
        (StepBudgetExceeded("walk too long", attempts=3), "RetryableError"),
        (RejectionBudgetExceeded("no tree", attempts=1000), "RetryableError"),
        (RuntimeError("boom"), "InternalError"),
    ],
)
def test_error_codes(exc: Exception, code: str) -> None:
    """Test which payload code each exception reports."""
    schema = get_error_schema(exc)
    assert schema.code == code
    assert schema.success is False
    assert schema.detail == str(exc)


def test_other_levytree_errors_keep_their_code() -> None:
    """Test that an unlisted subclass reports its own code and message."""

    class CustomError(LevyTreeError):
        code = "CustomError"

    schema = get_error_schema(CustomError("odd"))
    assert (schema.code, schema.message) == ("CustomError", "odd")


def test_validation_errors_list_their_locations() -> None:
    """Test the loc/msg/type rows of a pydantic validation error."""
    schema = get_error_schema(_validation_error())
    assert schema.code == "InputError"
    assert isinstance(schema.detail, list)
    assert schema.detail[0]["loc"] == ["x"]
    assert schema.detail[0]["type"] == "int_parsing"


@pytest.mark.parametrize(
    ("exc", "expected"),
    [
        (DomainError("x"), EXIT_INPUT_ERROR),
        (PrecisionError("x"), EXIT_INPUT_ERROR),
        (ConfigError("x"), EXIT_INPUT_ERROR),
        (ResourceError("x"), EXIT_INPUT_ERROR),
        (FileNotFoundError("x"), EXIT_INPUT_ERROR),
        (StepBudgetExceeded("x", attempts=2), EXIT_FAIL),
        (KeyError("x"), EXIT_INTERNAL_ERROR),
    ],
)
def test_exit_codes(exc: Exception, expected: int) -> None:
    """Test the exit code of every error class."""
    assert exit_code_for(exc) == expected


def test_validation_error_exit_code() -> None:
    """Test that invalid models are input errors."""
    assert exit_code_for(_validation_error()) == EXIT_INPUT_ERROR
