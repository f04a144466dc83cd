"""Time series containers and elementwise affine maps.

A series is an ordered vector of float64 samples with a string id. Values are
validated once at construction (finite, length >= 2) and frozen, so every
downstream computation can assume clean input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import LengthError, ShapeError, SpecError


def _as_values(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ShapeError(f"series values must be one-dimensional, got shape {arr.shape}")
    if arr.size < 2:
        raise LengthError(f"series needs at least 2 samples, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"series contains a non-finite value at position {bad}")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Immutable, finite, float64 series of length >= 2."""

    id: str
    values: np.ndarray

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise SpecError("series id must be a non-empty string")
        object.__setattr__(self, "values", _as_values(self.values))

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"TimeSeries(id={self.id!r}, n={self.n})"


@dataclass(frozen=True)
class ScalarAffine:
    """Elementwise map t -> scale * t + offset applied to every sample."""

    scale: float
    offset: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.scale) and np.isfinite(self.offset)):
            raise ValueError("affine coefficients must be finite")


REFLECT = ScalarAffine(-1.0, 0.0)


def affine(x: TimeSeries, t: ScalarAffine) -> TimeSeries:
    """Apply t elementwise, keeping the id."""
    return TimeSeries(x.id, t.scale * x.values + t.offset)


def reflect(x: TimeSeries) -> TimeSeries:
    """Pointwise negation -x. Exact in floating point."""
    return affine(x, REFLECT)


def constant_series(value: float, n: int, id: str = "const") -> TimeSeries:
    """Series of n copies of value."""
    if n < 2:
        raise LengthError(f"series needs at least 2 samples, got {n}")
    return TimeSeries(id, np.full(n, float(value)))


def is_constant(x: TimeSeries) -> bool:
    """True when every sample equals the first, by exact comparison.

    Near-constant series are deliberately not constant: any spread, however
    small, carries shape information.
    """
    return bool(np.all(x.values == x.values[0]))


@dataclass(frozen=True, eq=False)
class SeriesSet:
    """Ordered collection of series with unique ids and a common length."""

    series: tuple[TimeSeries, ...]
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        if not self.series:
            raise SpecError("series set must not be empty")
        object.__setattr__(self, "series", tuple(self.series))
        n = self.series[0].n
        for s in self.series:
            if s.n != n:
                raise ShapeError(
                    f"series {s.id!r} has length {s.n}, expected {n} like {self.series[0].id!r}"
                )
        index: dict[str, int] = {}
        for i, s in enumerate(self.series):
            if s.id in index:
                raise SpecError(f"duplicate series id {s.id!r}")
            index[s.id] = i
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return self.series[0].n

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.series)

    def __len__(self) -> int:
        return len(self.series)

    def __iter__(self) -> Iterator[TimeSeries]:
        return iter(self.series)

    def __getitem__(self, key) -> TimeSeries:
        if isinstance(key, str):
            try:
                return self.series[self._index[key]]
            except KeyError:
                raise KeyError(f"no series with id {key!r}") from None
        return self.series[key]

    def __contains__(self, id: str) -> bool:
        return id in self._index


def load_set(rows: Iterable[Sequence[float]], ids: Sequence[str] | None = None) -> SeriesSet:
    """Build a SeriesSet from row vectors.

    Ids default to "s1", "s2", ... in input order.
    """
    rows = list(rows)
    if ids is None:
        ids = [f"s{i + 1}" for i in range(len(rows))]
    else:
        ids = list(ids)
        if len(ids) != len(rows):
            raise ShapeError(f"got {len(ids)} ids for {len(rows)} rows")
    return SeriesSet(tuple(TimeSeries(i, r) for i, r in zip(ids, rows)))
