"""Scenario configs: the line-oriented `key = value` file format and validation."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .market import MarketParams, UtilityCurve, ValuationModel, data_utility

__all__ = [
    "ScenarioConfig",
    "parse_scenario",
    "load_scenario",
    "taxi_scenario",
    "taxi_scenario_path",
]

_INT_FIELDS = ("M", "seed", "trials")
_FLOAT_FIELDS = ("k", "gamma", "N", "a", "b", "q", "tau")
_REQUIRED_FIELDS = ("M", "k", "gamma", "N", "a", "b")


@dataclass(frozen=True)
class ScenarioConfig:
    """One market scenario: market constants, utility curve, and run controls.

    q and tau are optional; commands that need them fail with the field name
    when they are missing.  Monte-Carlo runs use `trials` repetitions seeded
    from `seed`.
    """

    M: int
    k: float
    gamma: float
    N: float
    a: float
    b: float
    q: float | None = None
    tau: float | None = None
    seed: int = 0
    trials: int = 100

    def __post_init__(self):
        # delegate to the domain types so messages carry the field name
        MarketParams(M=self.M, k=self.k, gamma=self.gamma, N=self.N)
        UtilityCurve(a=self.a, b=self.b)
        if self.b <= 0:
            raise ValueError(f"scenario field b: slope must be positive, got {self.b}")
        if self.trials < 1:
            raise ValueError(
                f"scenario field trials: must be >= 1, got {self.trials}"
            )
        if self.q is not None and not 0 < self.q <= self.N:
            raise ValueError(
                f"scenario field q: must lie in (0, {self.N}], got {self.q}"
            )
        if self.tau is not None and self.tau <= 0:
            raise ValueError(
                f"scenario field tau: must be positive, got {self.tau}"
            )
        # performance plays the role of an accuracy-like rate even though the
        # curve itself is never clamped; flag scenarios that leave [0, 1]
        if data_utility(self.N, self.curve) > 1.0:
            warnings.warn(
                f"performance exceeds 1 at the maximum data size N={self.N}",
                stacklevel=2,
            )
        if self.a < 0.0:
            warnings.warn("performance is negative at data size 1", stacklevel=2)

    @property
    def market(self) -> MarketParams:
        return MarketParams(M=self.M, k=self.k, gamma=self.gamma, N=self.N)

    @property
    def curve(self) -> UtilityCurve:
        return UtilityCurve(a=self.a, b=self.b)

    def model(self, q: float | None = None) -> ValuationModel:
        """Valuation distribution at data size q (defaults to the configured q)."""
        size = self.q if q is None else q
        if size is None:
            raise ValueError("scenario field q: required but not set")
        return ValuationModel.from_market(self.curve, size, self.gamma)


def parse_scenario(text: str) -> ScenarioConfig:
    """Parse the `key = value` scenario format; `#` starts a comment."""
    fields: dict[str, float | int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(
                f"scenario line {lineno}: expected 'key = value', got {raw.strip()!r}"
            )
        key, _, value = (part.strip() for part in line.partition("="))
        if key in fields:
            raise ValueError(f"scenario line {lineno}: duplicate field {key!r}")
        if key in _INT_FIELDS:
            try:
                fields[key] = int(value)
            except ValueError:
                raise ValueError(
                    f"scenario field {key}: expected an integer, got {value!r}"
                ) from None
        elif key in _FLOAT_FIELDS:
            try:
                fields[key] = float(value)
            except ValueError:
                raise ValueError(
                    f"scenario field {key}: expected a number, got {value!r}"
                ) from None
        else:
            raise ValueError(f"scenario line {lineno}: unknown field {key!r}")
    missing = [name for name in _REQUIRED_FIELDS if name not in fields]
    if missing:
        raise ValueError(f"scenario is missing required fields: {', '.join(missing)}")
    return ScenarioConfig(**fields)


def load_scenario(path: str | Path) -> ScenarioConfig:
    """Read and validate a scenario config file."""
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def taxi_scenario_path() -> Path:
    """Path of the bundled taxi trip-time benchmark scenario."""
    return Path(str(resources.files("datamarket").joinpath("data/scenario.paper.cfg")))


def taxi_scenario() -> ScenarioConfig:
    """The bundled taxi trip-time benchmark scenario."""
    return load_scenario(taxi_scenario_path())
