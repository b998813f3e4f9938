"""Error payload schemas for the command line interface."""

from typing import ClassVar, Literal

from pydantic import BaseModel, ConfigDict

from levytree.types import DictStrAny


class ErrorSchema(BaseModel):
    """The default error schema."""

    model_config: ClassVar[ConfigDict] = {
        "from_attributes": True,
        "frozen": True,
    }

    success: Literal[False] = False
    code: str
    message: str = ""
    detail: str | list[DictStrAny] | None = None


class DomainErrorSchema(ErrorSchema):
    """An argument was outside the domain of the requested operation."""

    code: str = "DomainError"
    message: str = "An argument lies outside the domain of the operation."


class PrecisionErrorSchema(ErrorSchema):
    """A time was not on the path grid."""

    code: str = "PrecisionError"
    message: str = "The requested time is not a grid point of the path."


class InputErrorSchema(ErrorSchema):
    """The input could not be parsed or validated."""

    code: str = "InputError"
    message: str = "The input could not be processed."


class ResourceErrorSchema(ErrorSchema):
    """The request was too large."""

    code: str = "ResourceError"
    message: str = "The request exceeds a resource limit."


class RetryableErrorSchema(ErrorSchema):
    """A randomized procedure exhausted its budget."""

    code: str = "RetryableError"
    message: str = (
        "A sampler exhausted its budget. Rerunning with another seed may succeed."
    )


class InternalErrorSchema(ErrorSchema):
    """Anything else."""

    code: str = "InternalError"
    message: str = "An unexpected condition prevented the command from finishing."
