from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

DEFAULT_CUTOFF = 10**8


@dataclass(frozen=True)
class Config:
    brute_force_cutoff: int = DEFAULT_CUTOFF
    threads: Union[int, str] = "auto"
    output: str = "json"

    def __post_init__(self):
        if self.brute_force_cutoff < 1:
            raise ValueError("brute_force_cutoff must be >= 1")
        if self.output not in ("json", "table"):
            raise ValueError(f"unknown output format {self.output!r}")
        if self.threads != "auto" and int(self.threads) < 1:
            raise ValueError("threads must be a positive integer or 'auto'")

    @property
    def workers(self) -> int:
        if self.threads == "auto":
            return os.cpu_count() or 1
        return int(self.threads)

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        values = {}
        env = os.environ.get("GCOVER_CUTOFF")
        if env:
            values["brute_force_cutoff"] = int(env)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
