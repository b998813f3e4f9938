"""Replica execution with per-replica random substreams."""

import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from beartype import beartype

from levytree.config import McConfig
from levytree.errors import RetryableError
from levytree.rng import replica_stream

logger: logging.Logger = logging.getLogger("levytree")


@beartype
def retrying[T](
    fn: Callable[[np.random.Generator], T],
    cfg: McConfig,
    index: int,
) -> tuple[T, int]:
    """Run ``fn`` on the stream of replica ``index``, retrying on fresh substreams.

    Attempt ``a`` uses substream (seed, index, a). Returns the result and the
    number of retries spent.

    Raises:
        RetryableError: Every attempt up to ``cfg.max_retries`` retries failed.

    """
    for attempt in range(cfg.max_retries + 1):
        try:
            return fn(replica_stream(cfg.seed, index, attempt)), attempt
        except RetryableError as exc:
            logger.warning(
                "Replica %d attempt %d gave up: %s",
                index,
                attempt,
                exc,
            )
            if attempt == cfg.max_retries:
                exc.attempts = attempt + 1
                raise
    msg = "unreachable"
    raise AssertionError(msg)


def _run_chunk[T](fn: Callable[[int], T], start: int, stop: int) -> list[T]:
    return [fn(index) for index in range(start, stop)]


@beartype
def chunk_bounds(count: int, workers: int) -> list[tuple[int, int]]:
    """Split ``range(count)`` into at most ``workers`` contiguous chunks."""
    chunks = max(1, min(workers, count))
    edges = np.linspace(0, count, chunks + 1).round().astype(int).tolist()
    return [(a, b) for a, b in zip(edges[:-1], edges[1:], strict=True) if b > a]


@beartype
def run_replicas[T](fn: Callable[[int], T], count: int, cfg: McConfig) -> list[T]:
    """Return ``[fn(0), ..., fn(count - 1)]``.

    With ``cfg.workers > 1`` contiguous chunks run in a process pool and are
    reassembled in index order, so the result does not depend on the worker
    hint. ``fn`` must be picklable.
    """
    if cfg.workers == 1 or count < 2:
        return _run_chunk(fn, 0, count)
    bounds = chunk_bounds(count, cfg.workers)
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [pool.submit(_run_chunk, fn, start, stop) for start, stop in bounds]
        results: list[T] = []
        for (start, stop), future in zip(bounds, futures, strict=True):
            results.extend(future.result())
            logger.debug("Merged replicas %d..%d", start, stop - 1)
    return results
