"""Counter-based random streams: one independent Philox stream per (seed, suite, index)."""

from __future__ import annotations

import zlib

import numpy as np


def stream(seed: int, suite: str = "", index: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence([seed, zlib.crc32(suite.encode()), index])
    return np.random.Generator(np.random.Philox(ss))
