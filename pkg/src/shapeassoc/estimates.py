"""Central (location) and scale estimates used by standardizations.

Every central estimate maps a series to a single number lying between its
minimum and maximum. Estimates are small frozen spec objects; `central` and
`scale` evaluate them, `estimate_traits` / `scale_traits` report the algebraic
behavior that standardizations and measures rely on:

- translation additive:  E(x + q) = E(x) + q
- scale proportional:    E(p * x) = p * E(x) for p > 0
- odd:                   E(-x) = -E(x)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import SpecError
from .series import TimeSeries


def _check_weights(weights) -> tuple[float, ...]:
    w = tuple(float(v) for v in weights)
    if not w:
        raise SpecError("weight vector must not be empty")
    if any(not np.isfinite(v) for v in w):
        raise SpecError("weights must be finite")
    if any(v < 0.0 for v in w):
        raise SpecError("weights must be nonnegative")
    total = float(np.sum(w))
    if abs(total - 1.0) > 1e-9:
        raise SpecError(f"weights must sum to 1 within 1e-9, got {total!r}")
    return w


@dataclass(frozen=True)
class Min:
    pass


@dataclass(frozen=True)
class Max:
    pass


@dataclass(frozen=True)
class Midrange:
    """(min + max) / 2."""


@dataclass(frozen=True)
class Projection:
    """The k-th sample in original order (1-based)."""

    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise SpecError(f"projection index must be >= 1, got {self.k}")


@dataclass(frozen=True)
class OrderStatistic:
    """The k-th smallest sample (1-based)."""

    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise SpecError(f"order statistic index must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Median:
    pass


@dataclass(frozen=True)
class TruncatedMean:
    """Mean after dropping the m smallest and m largest samples.

    m = 0 gives the arithmetic mean.
    """

    m: int = 1

    def __post_init__(self):
        if self.m < 0:
            raise SpecError(f"truncation count must be >= 0, got {self.m}")


@dataclass(frozen=True)
class GeneralizedMidrange:
    """Mean of the m-k smallest and m-k largest samples, skipping k extremes.

    With k=0, m=1 this is the plain midrange.
    """

    k: int = 0
    m: int = 1

    def __post_init__(self):
        if not 0 <= self.k < self.m:
            raise SpecError(f"need 0 <= k < m, got k={self.k}, m={self.m}")


@dataclass(frozen=True)
class ArithmeticMean:
    pass


@dataclass(frozen=True)
class WeightedMean:
    """Dot product with a fixed nonnegative weight vector summing to 1.

    The weight length pins the series length; weights are never renormalized.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights))


@dataclass(frozen=True)
class OrderedWeightedMean:
    """Weighted mean applied to the ascending sort of the samples."""

    weights: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", _check_weights(self.weights))


CentralEstimate = Union[
    Min,
    Max,
    Midrange,
    Projection,
    OrderStatistic,
    Median,
    TruncatedMean,
    GeneralizedMidrange,
    ArithmeticMean,
    WeightedMean,
    OrderedWeightedMean,
]


@dataclass(frozen=True)
class Range:
    """max - min. Even: Range(-x) = Range(x)."""


@dataclass(frozen=True)
class MinkowskiDeviation:
    """(sum_i |x_i - E(x)|**r) ** (1/r) around a central estimate E."""

    r: float
    center: CentralEstimate

    def __post_init__(self):
        if not (np.isfinite(self.r) and self.r >= 1.0):
            raise SpecError(f"deviation order must be >= 1, got {self.r!r}")


ScaleEstimate = Union[Range, MinkowskiDeviation]


def _require_min_length(spec, n: int) -> None:
    lo, exact = length_constraints(spec)
    if exact is not None and n != exact:
        raise SpecError(f"{type(spec).__name__} weights fix the length to {exact}, got {n}")
    if n < lo:
        raise SpecError(f"{type(spec).__name__} needs length >= {lo}, got {n}")


def length_constraints(spec) -> tuple[int, int | None]:
    """(minimum length, exact length or None) implied by spec parameters."""
    if isinstance(spec, (Projection, OrderStatistic)):
        return max(2, spec.k), None
    if isinstance(spec, TruncatedMean):
        return max(2, 2 * spec.m + 1), None
    if isinstance(spec, GeneralizedMidrange):
        return 2 * spec.m + 1, None
    if isinstance(spec, (WeightedMean, OrderedWeightedMean)):
        return len(spec.weights), len(spec.weights)
    if isinstance(spec, MinkowskiDeviation):
        return length_constraints(spec.center)
    return 2, None


def central_values(spec: CentralEstimate, v: np.ndarray) -> float:
    """Evaluate a central estimate on a raw value vector."""
    n = v.size
    _require_min_length(spec, n)
    if isinstance(spec, Min):
        return float(v.min())
    if isinstance(spec, Max):
        return float(v.max())
    if isinstance(spec, Midrange):
        return float((v.min() + v.max()) / 2.0)
    if isinstance(spec, Projection):
        return float(v[spec.k - 1])
    if isinstance(spec, OrderStatistic):
        return float(np.sort(v)[spec.k - 1])
    if isinstance(spec, Median):
        s = np.sort(v)
        mid = n // 2
        if n % 2:
            return float(s[mid])
        return float((s[mid - 1] + s[mid]) / 2.0)
    if isinstance(spec, TruncatedMean):
        s = np.sort(v)
        return float(s[spec.m : n - spec.m].mean())
    if isinstance(spec, GeneralizedMidrange):
        s = np.sort(v)
        if spec.k == 0 and spec.m == 1:
            # plain midrange, kept exactly equal to Midrange()
            return float((s[0] + s[-1]) / 2.0)
        low = s[spec.k : spec.m]
        high = s[n - spec.m : n - spec.k]
        return float((low.sum() + high.sum()) / (2.0 * (spec.m - spec.k)))
    if isinstance(spec, ArithmeticMean):
        return float(v.mean())
    if isinstance(spec, WeightedMean):
        return float(np.dot(spec.weights, v))
    if isinstance(spec, OrderedWeightedMean):
        return float(np.dot(spec.weights, np.sort(v)))
    raise SpecError(f"unknown central estimate {spec!r}")


def central(spec: CentralEstimate, x: TimeSeries) -> float:
    return central_values(spec, x.values)


def scale_values(spec: ScaleEstimate, v: np.ndarray) -> float:
    """Evaluate a scale estimate on a raw value vector."""
    if isinstance(spec, Range):
        return float(v.max() - v.min())
    if isinstance(spec, MinkowskiDeviation):
        d = np.abs(v - central_values(spec.center, v))
        if spec.r == 1.0:
            return float(d.sum())
        if spec.r == 2.0:
            return float(np.sqrt(np.dot(d, d)))
        return float((d ** spec.r).sum() ** (1.0 / spec.r))
    raise SpecError(f"unknown scale estimate {spec!r}")


def scale(spec: ScaleEstimate, x: TimeSeries) -> float:
    return scale_values(spec, x.values)


@dataclass(frozen=True)
class EstimateTraits:
    translation_additive: bool
    scale_proportional: bool
    odd: bool


_ODD = (
    Midrange,
    Projection,
    Median,
    TruncatedMean,
    GeneralizedMidrange,
    ArithmeticMean,
    WeightedMean,
)


def estimate_traits(spec: CentralEstimate) -> EstimateTraits:
    """Algebraic traits of a central estimate.

    Every catalog estimate is translation additive and scale proportional.
    Oddness holds for the symmetric ones; Min/Max/OrderStatistic swap under
    negation instead (OS_k(-x) = -OS_{n+1-k}(x)), and ordered weighted means
    are only odd for palindromic weights, which we do not claim.
    """
    if not isinstance(
        spec,
        (Min, Max, OrderStatistic, OrderedWeightedMean) + _ODD,
    ):
        raise SpecError(f"unknown central estimate {spec!r}")
    return EstimateTraits(
        translation_additive=True,
        scale_proportional=True,
        odd=isinstance(spec, _ODD),
    )


@dataclass(frozen=True)
class ScaleTraits:
    translation_invariant: bool
    scale_proportional: bool
    even: bool


def scale_traits(spec: ScaleEstimate) -> ScaleTraits:
    """Algebraic traits of a scale estimate.

    Range is even outright; a Minkowski deviation is even exactly when its
    center is odd (then the deviations of -x are the negated deviations of x).
    """
    if isinstance(spec, Range):
        return ScaleTraits(True, True, True)
    if isinstance(spec, MinkowskiDeviation):
        return ScaleTraits(True, True, estimate_traits(spec.center).odd)
    raise SpecError(f"unknown scale estimate {spec!r}")
