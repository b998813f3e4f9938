"""Configuration objects for Monte Carlo verification runs."""

from dataclasses import dataclass, replace

from beartype import beartype

from levytree.errors import ConfigError

DEFAULT_ALPHA = 0.001
DEFAULT_STEP_BUDGET = 10**7
MIN_REPLICAS = 100
MAX_ALPHA = 0.05


@beartype
@dataclass(frozen=True, kw_only=True)
class McConfig:  # pylint: disable=too-many-instance-attributes
    """Configuration for a Monte Carlo verification suite.

    grid: int: Grid size n of the sampled excursions (n + 1 samples), or the
        edge count for tree based samplers.

    replicas: int: Number of replicas N per side of a two-sample comparison.

    seed: int: Root seed. Replica i draws from substream (seed, i).

    alpha: float: Family-wise significance floor, split over the functional
        battery with Bonferroni.

    workers: int: Worker hint. Has no influence on any result.

    step_budget: int: Maximum walk length when sampling spine paths.

    max_retries: int: How many fresh substreams a replica may use after a
        retryable failure.
    """

    grid: int = 4096
    replicas: int = 20_000
    seed: int = 0
    alpha: float = DEFAULT_ALPHA
    workers: int = 1
    step_budget: int = DEFAULT_STEP_BUDGET
    max_retries: int = 100

    def __post_init__(self) -> None:
        """Validate the configuration."""
        if self.grid < 2:
            msg = f"grid must be at least 2, got {self.grid}."
            raise ConfigError(msg)
        if self.replicas < MIN_REPLICAS:
            msg = f"replicas must be at least {MIN_REPLICAS}, got {self.replicas}."
            raise ConfigError(msg)
        if self.seed < 0:
            msg = f"seed must be nonnegative, got {self.seed}."
            raise ConfigError(msg)
        if not 0 < self.alpha <= MAX_ALPHA:
            msg = f"alpha must lie in (0, {MAX_ALPHA}], got {self.alpha}."
            raise ConfigError(msg)
        if self.workers < 1:
            msg = f"workers must be at least 1, got {self.workers}."
            raise ConfigError(msg)
        if self.step_budget < 1 or self.max_retries < 0:
            msg = "step_budget must be positive and max_retries nonnegative."
            raise ConfigError(msg)

    def with_overrides(self, **overrides: int | float) -> "McConfig":
        """Return a validated copy with some fields replaced."""
        return replace(self, **overrides)  # pyright: ignore[reportArgumentType]

    def provenance(self) -> dict[str, int | float]:
        """Return the fields that determine a run's results.

        Excludes the worker hint.
        """
        return {
            "grid": self.grid,
            "replicas": self.replicas,
            "seed": self.seed,
            "alpha": self.alpha,
            "step_budget": self.step_budget,
            "max_retries": self.max_retries,
        }
