"""Shared builders for the test suite."""

from __future__ import annotations

import numpy as np

from shapeassoc import TimeSeries


def ts(values, id: str = "x") -> TimeSeries:
    return TimeSeries(id, np.asarray(values, dtype=float))


def random_values(rng: np.random.Generator, n: int) -> np.ndarray:
    """Non-constant uniform values on (-10, 10)."""
    while True:
        v = rng.uniform(-10.0, 10.0, size=n)
        if np.min(v) < np.max(v):
            return v


def random_series(rng: np.random.Generator, n: int, id: str = "x") -> TimeSeries:
    return TimeSeries(id, random_values(rng, n))
