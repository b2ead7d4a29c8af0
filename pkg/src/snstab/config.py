from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .perms import DEFAULT_EXHAUSTIVE_CAP
from .reconstruct import DEFAULT_C0, DEFAULT_EPS0

FORMATS = ("json", "csv", "table")


def _default_cap() -> int:
    return int(os.environ.get("SNSTAB_CAP", DEFAULT_EXHAUSTIVE_CAP))


@dataclass
class RunConfig:
    """Settings shared by every command.  Randomized work is a pure function of
    ``seed``: stream k of suite s is Philox keyed by (seed, crc32(s), k)."""

    n: int | None = None
    exhaustive_cap: int = field(default_factory=_default_cap)
    numeric_cap: int = 5
    seed: int = 0
    c0: Fraction = DEFAULT_C0
    eps0: Fraction = DEFAULT_EPS0
    output_format: str = "table"
    jobs: int | None = None
    # sample sizes for the randomized verification suites
    samples: int = 1000
    boundary_samples: int = 10_000
    trials: int = 200

    def __post_init__(self):
        self.c0 = Fraction(self.c0)
        self.eps0 = Fraction(self.eps0)
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")
        if self.exhaustive_cap < 1:
            raise ValueError("cap must be positive")
        if self.c0 <= 0 or self.eps0 <= 0:
            raise ValueError("c0 and eps0 must be positive")

    def public(self) -> dict:
        """The fields that affect results (jobs does not)."""
        return {
            "n": self.n,
            "exhaustive_cap": self.exhaustive_cap,
            "numeric_cap": self.numeric_cap,
            "seed": self.seed,
            "c0": self.c0,
            "eps0": self.eps0,
            "output_format": self.output_format,
        }
