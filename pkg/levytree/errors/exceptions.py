"""Exception hierarchy of the levytree package."""


class LevyTreeError(Exception):
    """Base class of all levytree errors."""

    code: str = "LevyTreeError"


class DomainError(LevyTreeError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    code = "DomainError"


class PrecisionError(DomainError):
    """A time that must be a grid point is not one."""

    code = "PrecisionError"


class InputError(LevyTreeError, ValueError):
    """Malformed user input: parameters, files or command line values."""

    code = "InputError"


class ConfigError(InputError):
    """Invalid configuration values."""

    code = "ConfigError"


class PathFormatError(InputError):
    """A path, tree or measure file does not follow its format."""

    code = "PathFormatError"


class ResourceError(LevyTreeError):
    """The request exceeds a hard resource limit."""

    code = "ResourceError"


class RetryableError(LevyTreeError):
    """A randomized procedure gave up; retrying on a fresh substream may succeed."""

    code = "RetryableError"

    def __init__(self, message: str, attempts: int) -> None:
        """Initialize with the number of attempts already spent."""
        super().__init__(message)
        self.attempts: int = attempts


class RejectionBudgetExceeded(RetryableError):
    """A rejection sampler used up its attempt budget."""

    code = "RejectionBudgetExceeded"


class StepBudgetExceeded(RetryableError):
    """A walk did not hit its target level within the step budget."""

    code = "StepBudgetExceeded"
