"""Utility functions for testing."""

import json
from pathlib import Path

from rich import print_json

from levytree.harness import TestReport
from levytree.paths import ContourExcursion, FinitePath


def debug_report(report: TestReport) -> None:  # pragma: no cover
    """Print the report pretty and keep a copy in debug.json."""
    text = report.to_json()
    print_json(text, indent=4)
    Path("debug.json").write_text(text)


def samples(path: FinitePath) -> list[int | float]:
    """The samples of ``path`` as a plain list."""
    return path.samples.tolist()


def excursion(*values: int) -> ContourExcursion:
    """An integer excursion on the unit grid."""
    return ContourExcursion(list(values))


def report_line(report: TestReport) -> dict[str, object]:
    """The report as the JSON object written to report files."""
    return json.loads(report.to_json())
