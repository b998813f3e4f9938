"""Path CSV files: header ``t,value`` and one row per grid point."""

import csv
import math
from pathlib import Path

import numpy as np
from beartype import beartype

from levytree.errors import PathFormatError
from levytree.paths.finite_path import GRID_TOLERANCE, FinitePath

HEADER = ("t", "value")


def _format(value: float | int) -> str:
    # repr gives the shortest string that round-trips a binary64
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _parse(token: str, row: int) -> float | int:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError as exc:
        msg = f"Row {row}: {token!r} is not a number."
        raise PathFormatError(msg) from exc


@beartype
def write_path(path: FinitePath, destination: Path) -> None:
    """Write ``path`` as a ``t,value`` CSV file."""
    integer_times = isinstance(path.step, int)
    with destination.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(HEADER)
        for index, value in enumerate(path.samples.tolist()):
            t = index * path.step
            writer.writerow((_format(t if integer_times else float(t)), _format(value)))


@beartype
def read_path[P: FinitePath](source: Path, kind: type[P] = FinitePath) -> P:
    """Read a ``t,value`` CSV file into a path of type ``kind``.

    Raises:
        PathFormatError: The header, a number or the grid is malformed.

    """
    with source.open(newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows or tuple(cell.strip() for cell in rows[0]) != HEADER:
        msg = f"{source}: expected header 't,value'."
        raise PathFormatError(msg)
    body = [row for row in rows[1:] if row]
    if not body:
        msg = f"{source}: no samples."
        raise PathFormatError(msg)
    if any(len(row) != len(HEADER) for row in body):
        msg = f"{source}: every row needs exactly two columns."
        raise PathFormatError(msg)
    times = [_parse(row[0].strip(), number) for number, row in enumerate(body, 1)]
    values = [_parse(row[1].strip(), number) for number, row in enumerate(body, 1)]
    if times[0] != 0:
        msg = f"{source}: the first time must be 0, got {times[0]}."
        raise PathFormatError(msg)
    step: float | int = times[1] if len(times) > 1 else 1
    if step <= 0:
        msg = f"{source}: times must increase."
        raise PathFormatError(msg)
    for index, t in enumerate(times):
        if not math.isclose(t, index * step, rel_tol=GRID_TOLERANCE, abs_tol=0.0):
            msg = f"{source}: row {index + 1} breaks the constant spacing."
            raise PathFormatError(msg)
    if all(isinstance(v, int) for v in values):
        samples = np.asarray(values, dtype=np.int64)
    else:
        samples = np.asarray(values, dtype=np.float64)
    return kind(samples, step)
