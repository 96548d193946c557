from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_BOUND = 3


def default_bound() -> int:
    raw = os.environ.get("SKELLIM_BOUND")
    if raw is None:
        return DEFAULT_BOUND
    value = int(raw)
    if value <= 0:
        raise ValueError("SKELLIM_BOUND must be positive")
    return value


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the CLI and the acceptance harness."""

    dim_bound: int = DEFAULT_BOUND
    lifting_bound: int = DEFAULT_BOUND
    kappa: int = 64
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        for name in ("dim_bound", "lifting_bound", "kappa"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("json", "dot", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        b = default_bound()
        kw = {"dim_bound": b, "lifting_bound": b}
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)
