"""Functionals of finite paths used as test statistics."""

import math
from fractions import Fraction
from typing import ClassVar, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from levytree.errors import InputError
from levytree.paths import FinitePath, eval_path
from levytree.types import FunctionalTag


class FunctionalSpec(BaseModel):
    """A real functional of a finite path, or a component of a triplet."""

    model_config: ClassVar[ConfigDict] = {"frozen": True}

    tag: FunctionalTag
    fraction: float | None = Field(default=None, ge=0, le=1)
    component: int | None = Field(default=None, ge=0, le=2)

    @model_validator(mode="after")
    def check_arguments(self) -> Self:
        """``eval_at`` needs a fraction, ``triplet_component`` a component."""
        if (self.tag == "eval_at") != (self.fraction is not None):
            msg = "eval_at takes a fraction and only eval_at does."
            raise ValueError(msg)
        if (self.tag == "triplet_component") != (self.component is not None):
            msg = "triplet_component takes a component and only it does."
            raise ValueError(msg)
        return self

    @property
    def name(self) -> str:
        """Name used in report rows."""
        if self.tag == "eval_at":
            return f"eval_at({self.fraction:g})"
        if self.tag == "triplet_component":
            return f"triplet_component({self.component})"
        return self.tag

    @classmethod
    def parse(cls, text: str) -> "FunctionalSpec":
        """Parse ``sup``, ``area``, ``duration``, ``eval_at(0.25)`` or ``triplet_component(1)``.

        Raises:
            InputError: Unknown functional.

        """
        text = text.strip()
        head, _, rest = text.partition("(")
        argument = rest.removesuffix(")") if rest else None
        try:
            if head == "eval_at" and argument is not None:
                return cls(tag="eval_at", fraction=float(argument))
            if head == "triplet_component" and argument is not None:
                return cls(tag="triplet_component", component=int(argument))
            if head in {"sup", "area", "duration"} and argument is None:
                return cls(tag=head)  # pyright: ignore[reportArgumentType]
        except ValueError as exc:
            msg = f"Invalid functional {text!r}: {exc}"
            raise InputError(msg) from exc
        msg = f"Unknown functional {text!r}."
        raise InputError(msg)

    def evaluate(self, path: FinitePath) -> float:
        """Evaluate on a path in floating point."""
        match self.tag:
            case "eval_at":
                return float(eval_path(path, self._time(path)))
            case "sup":
                return float(path.samples.max())
            case "area":
                return float(np.trapezoid(path.samples, dx=path.step))
            case "duration":
                return float(path.lifetime)
            case _:
                msg = f"{self.name} applies to triplets, not paths."
                raise InputError(msg)

    def evaluate_triplet(self, values: tuple[float, float, float]) -> float:
        """Return the selected triplet component."""
        if self.component is None:
            msg = f"{self.name} applies to paths, not triplets."
            raise InputError(msg)
        return float(values[self.component])

    def evaluate_exact(self, path: FinitePath) -> Fraction:
        """Evaluate on an integer path with integer step in exact arithmetic."""
        if not path.is_integer or not isinstance(path.step, int):
            msg = "Exact evaluation needs integer samples on an integer grid."
            raise InputError(msg)
        x = path.samples.tolist()
        match self.tag:
            case "eval_at":
                position = Fraction(self.fraction or 0) * path.size
                left = min(math.floor(position), path.size)
                if left == position:
                    return Fraction(x[left])
                return x[left] + (position - left) * (x[left + 1] - x[left])
            case "sup":
                return Fraction(max(x))
            case "area":
                inner = sum(x) - Fraction(x[0] + x[-1], 2)
                return inner * path.step
            case "duration":
                return Fraction(path.lifetime)
            case _:
                msg = f"{self.name} applies to triplets, not paths."
                raise InputError(msg)

    def _time(self, path: FinitePath) -> float:
        return min(float(self.fraction or 0) * float(path.lifetime), float(path.lifetime))


def default_battery() -> list[FunctionalSpec]:
    """eval_at 1/4, 1/2, 3/4, sup, area and duration."""
    return [
        FunctionalSpec(tag="eval_at", fraction=0.25),
        FunctionalSpec(tag="eval_at", fraction=0.5),
        FunctionalSpec(tag="eval_at", fraction=0.75),
        FunctionalSpec(tag="sup"),
        FunctionalSpec(tag="area"),
        FunctionalSpec(tag="duration"),
    ]


def parse_battery(text: str) -> list[FunctionalSpec]:
    """Parse a ``;``-separated list of functionals."""
    specs = [FunctionalSpec.parse(part) for part in text.split(";") if part.strip()]
    if not specs:
        msg = "The functional battery is empty."
        raise InputError(msg)
    return specs


def evaluate_battery(battery: list[FunctionalSpec], path: FinitePath) -> list[float]:
    """Evaluate every functional of ``battery`` on ``path``."""
    return [spec.evaluate(path) for spec in battery]
