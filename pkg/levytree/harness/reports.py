"""Verification reports and their JSON-lines persistence."""

import json
from pathlib import Path
from typing import ClassVar, Self

from beartype import beartype
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from levytree.errors import PathFormatError
from levytree.types import ParamValue, TestMode

REPORT_VERSION = "1"


class StatRow(BaseModel):
    """One functional's statistic; ``p`` is None in exact mode."""

    model_config: ClassVar[ConfigDict] = {"frozen": True}

    functional: str
    statistic: float | int | str
    p: float | None = None


class TestReport(BaseModel):
    """Outcome of an exact or statistical verification suite."""

    __test__ = False  # not a pytest test class

    model_config: ClassVar[ConfigDict] = {"frozen": True, "populate_by_name": True}

    suite: str
    mode: TestMode
    params: dict[str, ParamValue] = {}
    seed: int | None = None
    stats: list[StatRow] = []
    passed: bool = Field(alias="pass")
    runtime_ms: float = 0.0
    version: str = REPORT_VERSION

    @model_validator(mode="after")
    def check_mode(self) -> Self:
        """Exact reports carry no p-values."""
        if self.mode == "exact" and any(row.p is not None for row in self.stats):
            msg = "Exact reports carry no p-values."
            raise ValueError(msg)
        return self

    @property
    def min_p(self) -> float | None:
        """The smallest p-value, None when there is none."""
        values = [row.p for row in self.stats if row.p is not None]
        return min(values) if values else None

    def to_json(self) -> str:
        """Serialize with the wire names."""
        return self.model_dump_json(by_alias=True)

    def canonical_json(self) -> str:
        """Serialize without the wall-clock runtime, for reproducibility checks."""
        return self.model_dump_json(by_alias=True, exclude={"runtime_ms"})


class SummaryRow(BaseModel):
    """One line of ``report summarize``."""

    suite: str
    mode: TestMode
    passed: bool
    tests: int
    min_p: float | None
    seed: int | None
    runtime_ms: float


@beartype
def append_report(destination: Path, report: TestReport) -> None:
    """Append ``report`` as one JSON line."""
    with destination.open("a") as handle:
        handle.write(report.to_json() + "\n")


@beartype
def read_reports(source: Path) -> list[TestReport]:
    """Read every report of a JSON-lines file.

    Raises:
        PathFormatError: A line is not a valid report.

    """
    reports: list[TestReport] = []
    for number, line in enumerate(source.read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            reports.append(TestReport.model_validate(json.loads(line)))
        except (ValidationError, json.JSONDecodeError) as exc:
            msg = f"{source}:{number}: not a report: {exc}"
            raise PathFormatError(msg) from exc
    return reports


@beartype
def summarize(reports: list[TestReport]) -> list[SummaryRow]:
    """Return one summary row per report, in file order."""
    return [
        SummaryRow(
            suite=report.suite,
            mode=report.mode,
            passed=report.passed,
            tests=len(report.stats),
            min_p=report.min_p,
            seed=report.seed,
            runtime_ms=report.runtime_ms,
        )
        for report in reports
    ]
