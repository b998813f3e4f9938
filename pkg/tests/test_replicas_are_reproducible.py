"""Test seeded substreams, retries, replica execution and the Monte Carlo configuration."""

import numpy as np
import pytest

from levytree.config import McConfig
from levytree.errors import ConfigError, RetryableError, StepBudgetExceeded
from levytree.harness import chunk_bounds, retrying, run_replicas
from levytree.rng import replica_stream, stream


def test_streams_are_keyed_by_seed_and_index() -> None:
    """Test that equal keys give equal streams and different keys differ."""
    assert stream(7, 3).random() == stream(7, 3).random()
    assert stream(7, 3).random() != stream(7, 4).random()
    assert stream(7).random() != stream(8).random()
    assert replica_stream(7, 3).random() == stream(7, 3).random()
    assert replica_stream(7, 3, 1).random() == stream(7, 3, 1).random()
    assert replica_stream(7, 3, 1).random() != replica_stream(7, 3).random()


def test_negative_keys_are_rejected() -> None:
    """Test that seeds and keys must be nonnegative."""
    with pytest.raises(ValueError, match="nonnegative"):
        stream(-1)
    with pytest.raises(ValueError, match="nonnegative"):
        stream(1, -2)


def test_retrying_without_failures(small_cfg: McConfig) -> None:
    """Test that a successful first attempt uses the replica's own stream."""
    value, retries = retrying(lambda rng: rng.random(), small_cfg, 5)
    assert retries == 0
    assert value == replica_stream(small_cfg.seed, 5).random()


def test_retrying_moves_to_fresh_substreams(small_cfg: McConfig) -> None:
    """Test that attempt a draws from substream (seed, index, a)."""
    calls: list[int] = []

    def flaky(rng: np.random.Generator) -> float:
        calls.append(1)
        if len(calls) < 3:
            msg = "too long"
            raise StepBudgetExceeded(msg, attempts=1)
        return rng.random()

    value, retries = retrying(flaky, small_cfg, 5)
    assert retries == 2
    assert value == replica_stream(small_cfg.seed, 5, 2).random()


def test_retrying_gives_up(small_cfg: McConfig) -> None:
    """Test that the error escapes after max_retries retries, with the attempt count."""
    cfg = small_cfg.with_overrides(max_retries=3)

    def hopeless(rng: np.random.Generator) -> float:
        msg = f"gave up after {rng.random()}"
        raise StepBudgetExceeded(msg, attempts=1)

    with pytest.raises(RetryableError) as info:
        retrying(hopeless, cfg, 0)
    assert info.value.attempts == 4


@pytest.mark.parametrize(
    ("count", "workers", "expected"),
    [
        (10, 3, [(0, 3), (3, 7), (7, 10)]),
        (2, 8, [(0, 1), (1, 2)]),
        (5, 1, [(0, 5)]),
        (0, 4, []),
    ],
)
def test_chunk_bounds(count: int, workers: int, expected: list[tuple[int, int]]) -> None:
    """Test contiguous chunks covering range(count)."""
    assert chunk_bounds(count, workers) == expected


@pytest.mark.parametrize("workers", [1, 3])
def test_run_replicas_keeps_index_order(small_cfg: McConfig, workers: int) -> None:
    """Test that results come back in replica order for any worker hint."""
    cfg = small_cfg.with_overrides(workers=workers)
    assert run_replicas(str, 7, cfg) == [str(index) for index in range(7)]


def test_config_defaults() -> None:
    """Test the default Monte Carlo configuration."""
    cfg = McConfig()
    assert (cfg.grid, cfg.replicas, cfg.seed, cfg.alpha) == (4096, 20_000, 0, 0.001)
    assert cfg.workers == 1


@pytest.mark.parametrize(
    "overrides",
    [
        {"grid": 1},
        {"replicas": 99},
        {"seed": -1},
        {"alpha": 0.0},
        {"alpha": 0.06},
        {"workers": 0},
        {"step_budget": 0},
        {"max_retries": -1},
    ],
)
def test_invalid_configurations(overrides: dict[str, int | float]) -> None:
    """Test every validation rule of McConfig."""
    with pytest.raises(ConfigError):
        McConfig(**overrides)  # pyright: ignore[reportArgumentType]


def test_overrides_are_validated(small_cfg: McConfig) -> None:
    """Test that with_overrides returns a checked copy."""
    assert small_cfg.with_overrides(replicas=200).replicas == 200
    assert small_cfg.replicas == 100
    with pytest.raises(ConfigError):
        small_cfg.with_overrides(alpha=1.0)


def test_provenance_excludes_the_worker_hint(small_cfg: McConfig) -> None:
    """Test that the fields recorded in reports do not include workers."""
    provenance = small_cfg.with_overrides(workers=4).provenance()
    assert "workers" not in provenance
    assert provenance == small_cfg.provenance()
