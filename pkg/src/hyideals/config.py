"""Configuration for the hyideals engine."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Any

from hyideals.validation import HARD_SIZE_LIMIT, CorpusError

_VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR"}

# Fields a corpus file may override through its "caps" object.
CAP_FIELDS = (
    "max_ring_size",
    "max_table_size",
    "subset_oracle_max",
    "strong_oracle_max",
    "all_subsets_max_spec",
    "sampled_subspaces",
    "exhaustive_ring_max",
    "tuple_budget",
    "law_sample_size",
)


def _env_int(name: str, default: int, *, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Invalid {name}={raw!r}. Must be an integer.")
    if value < minimum:
        raise ValueError(f"Invalid {name}={value}. Must be at least {minimum}.")
    return value


@dataclass(frozen=True)
class Config:
    """Engine configuration: size caps, sampling, seed and logging."""

    max_ring_size: int = 256
    max_table_size: int = 64
    subset_oracle_max: int = 16  # full 2^N subset quantification
    strong_oracle_max: int = 12
    all_subsets_max_spec: int = 6
    sampled_subspaces: int = 32
    exhaustive_ring_max: int = 16
    tuple_budget: int = 20_000
    law_sample_size: int = 100_000
    seed: int = 0
    workers: int = 1
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        for name in ("max_ring_size", "max_table_size"):
            value = getattr(self, name)
            if not (2 <= value <= HARD_SIZE_LIMIT):
                raise ValueError(
                    f"Invalid {name}={value}. Must be between 2 and {HARD_SIZE_LIMIT}."
                )
        if self.workers < 1:
            raise ValueError(f"Invalid workers={self.workers}. Must be at least 1.")
        if self.log_level not in _VALID_LOG_LEVELS:
            raise ValueError(
                f"Invalid log level {self.log_level!r}. "
                f"Must be one of: {', '.join(sorted(_VALID_LOG_LEVELS))}"
            )

    @classmethod
    def from_env(cls) -> Config:
        """Create config from HYIDEALS_* environment variables."""
        values: dict[str, Any] = {}
        for f in fields(cls):
            if f.name == "log_level":
                continue
            minimum = 1 if f.name == "workers" else 0
            values[f.name] = _env_int(f"HYIDEALS_{f.name.upper()}", f.default, minimum=minimum)
        values["log_level"] = os.environ.get("HYIDEALS_LOG_LEVEL", "WARNING").upper()
        return cls(**values)

    def with_caps(self, overrides: dict[str, int] | None) -> Config:
        """Return a copy with corpus cap overrides applied."""
        if not overrides:
            return self
        unknown = set(overrides) - set(CAP_FIELDS)
        if unknown:
            raise CorpusError(
                f"Unknown cap(s): {', '.join(sorted(unknown))}. "
                f"Must be among: {', '.join(CAP_FIELDS)}"
            )
        try:
            return replace(self, **overrides)
        except ValueError as e:
            raise CorpusError(str(e))

    def caps(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in CAP_FIELDS}
