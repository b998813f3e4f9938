"""Stable branching mechanisms ψ(u) = c·u^γ."""

import re
from dataclasses import dataclass

from beartype import beartype

from levytree.errors import ConfigError

BROWNIAN_GAMMA = 2.0

_ASSIGNMENT = re.compile(r"^\s*(?P<key>[a-z]+)\s*=\s*(?P<value>[^,=\s]+)\s*$")


@beartype
@dataclass(frozen=True, kw_only=True)
class LevyModel:
    """A stable Lévy tree model with branching mechanism ψ(u) = c·u^γ.

    gamma: float: Stability index γ in (1, 2]. γ = 2 is the Brownian CRT.

    c: float: Scale c > 0.

    The fields ``alpha``, ``beta`` and ``levy_measure`` describe ψ in the
    general form αu + βu² + ∫(e^{-ur} - 1 + ur) π(dr). They are fixed by
    ``gamma`` and ``c`` and only document the specialization.
    """

    gamma: float = BROWNIAN_GAMMA
    c: float = 1.0

    def __post_init__(self) -> None:
        """Validate the parameters."""
        if not 1.0 < self.gamma <= BROWNIAN_GAMMA:
            msg = f"gamma must lie in (1, 2], got {self.gamma}."
            raise ConfigError(msg)
        if not self.c > 0:
            msg = f"c must be positive, got {self.c}."
            raise ConfigError(msg)

    @property
    def is_brownian(self) -> bool:
        """Whether γ = 2."""
        return self.gamma == BROWNIAN_GAMMA

    @property
    def alpha(self) -> float:
        """The linear coefficient, zero for stable mechanisms."""
        return 0.0

    @property
    def beta(self) -> float:
        """The quadratic coefficient: c when γ = 2, zero otherwise."""
        return self.c if self.is_brownian else 0.0

    @property
    def levy_measure(self) -> str:
        """Description of the Lévy measure π."""
        if self.is_brownian:
            return "0"
        return f"const * r^(-1-{self.gamma}) dr"

    def psi(self, u: float) -> float:
        """Evaluate ψ(u) = c·u^γ."""
        return self.c * u**self.gamma

    def height_constant(self) -> float:
        """Default height normalization c^(-1/γ) of discrete contours."""
        return self.c ** (-1.0 / self.gamma)

    def describe(self) -> str:
        """Return the ``gamma=...,c=...`` form accepted by :meth:`parse`."""
        return f"gamma={self.gamma!r},c={self.c!r}"

    @classmethod
    def brownian(cls) -> "LevyModel":
        """Return ψ(u) = u², the Brownian CRT."""
        return cls(gamma=BROWNIAN_GAMMA, c=1.0)

    @classmethod
    def parse(cls, text: str) -> "LevyModel":
        """Parse ``"gamma=1.5,c=2"``; missing keys take their defaults.

        Raises:
            ConfigError: Unknown keys, repeated keys or non-numeric values.

        """
        values: dict[str, float] = {}
        for part in text.split(","):
            if not part.strip():
                continue
            match = _ASSIGNMENT.match(part)
            if match is None:
                msg = f"Cannot parse model assignment {part!r}."
                raise ConfigError(msg)
            key = match.group("key")
            if key not in {"gamma", "c"} or key in values:
                msg = f"Unknown or repeated model parameter {key!r}."
                raise ConfigError(msg)
            try:
                values[key] = float(match.group("value"))
            except ValueError as exc:
                msg = f"Model parameter {key} is not a number."
                raise ConfigError(msg) from exc
        return cls(**values)
