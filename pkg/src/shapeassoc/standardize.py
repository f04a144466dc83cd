"""Standardizations: centering and center-plus-scale normalization.

A standardization F rewrites a series so that comparisons see shape rather
than raw level. Two families:

- Center(E):            F(x) = x - E(x)
- CenterScale(E1, E2):  F(x) = (x - E1(x)) / E2(x)

Both are idempotent (F(F(x)) = F(x)) and translation invariant. CenterScale is
additionally scale invariant; Center is only scale proportional. `flags`
derives the properties a measure constructor may rely on, from the traits of
the chosen estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ConstantSeriesError, SpecError
from .estimates import (
    ArithmeticMean,
    CentralEstimate,
    GeneralizedMidrange,
    Min,
    MinkowskiDeviation,
    ScaleEstimate,
    central_values,
    estimate_traits,
    length_constraints,
    scale_traits,
    scale_values,
)
from .series import TimeSeries


@dataclass(frozen=True)
class Center:
    """Subtract a central estimate: F(x) = x - E(x)."""

    center: CentralEstimate


@dataclass(frozen=True)
class CenterScale:
    """Subtract a center, divide by a spread: F(x) = (x - E1(x)) / E2(x)."""

    center: CentralEstimate
    spread: ScaleEstimate


Standardization = Union[Center, CenterScale]


@dataclass(frozen=True)
class StandardizationFlags:
    """Algebraic behavior that measure constructors depend on.

    normality_order is set when the spread is the Minkowski deviation of the
    same center at order r: then sum_i |F(x)_i|**r == 1, which bounds the
    order-r dissimilarity of standardized series by 2.
    """

    translation_invariant: bool
    scale_invariant: bool
    scale_proportional: bool
    odd: bool
    normality_order: float | None


def flags(spec: Standardization) -> StandardizationFlags:
    if isinstance(spec, Center):
        traits = estimate_traits(spec.center)
        return StandardizationFlags(
            translation_invariant=traits.translation_additive,
            scale_invariant=False,
            scale_proportional=traits.scale_proportional,
            odd=traits.odd,
            normality_order=None,
        )
    if isinstance(spec, CenterScale):
        ctraits = estimate_traits(spec.center)
        straits = scale_traits(spec.spread)
        normality = None
        if isinstance(spec.spread, MinkowskiDeviation) and spec.spread.center == spec.center:
            normality = spec.spread.r
        return StandardizationFlags(
            translation_invariant=ctraits.translation_additive and straits.translation_invariant,
            scale_invariant=ctraits.scale_proportional and straits.scale_proportional,
            scale_proportional=False,
            odd=ctraits.odd and straits.even,
            normality_order=normality,
        )
    raise SpecError(f"unknown standardization {spec!r}")


def length_bounds(spec: Standardization) -> tuple[int, int | None]:
    """(minimum length, exact length or None) the standardization's estimates accept."""
    lo, exact = length_constraints(spec.center)
    if isinstance(spec, CenterScale):
        lo2, exact2 = length_constraints(spec.spread)
        lo, exact = max(lo, lo2), exact if exact is not None else exact2
    return lo, exact


def min_length(spec: Standardization) -> int:
    """Smallest series length the standardization's estimates accept."""
    lo, exact = length_bounds(spec)
    return exact if exact is not None else lo


def standardize_values(spec: Standardization, v: np.ndarray) -> np.ndarray:
    """Apply the standardization to a raw value vector."""
    if isinstance(spec, Center):
        return v - central_values(spec.center, v)
    if isinstance(spec, CenterScale):
        if np.all(v == v[0]):
            raise ConstantSeriesError(
                "cannot scale a constant series; its spread is zero"
            )
        centered = v - central_values(spec.center, v)
        return centered / scale_values(spec.spread, v)
    raise SpecError(f"unknown standardization {spec!r}")


def standardize(spec: Standardization, x: TimeSeries) -> TimeSeries:
    """Standardized copy of x, same id."""
    return TimeSeries(x.id, standardize_values(spec, x.values))


_PRESETS = ("center-mean", "center-min", "unit-mean", "unit-gmidrange")


def preset(name: str, r: float = 2.0, k: int = 0, m: int = 2) -> Standardization:
    """Named shorthand for the most used standardizations.

    - "center-mean":     Center(ArithmeticMean())
    - "center-min":      Center(Min())
    - "unit-mean":       CenterScale(AM, MinkowskiDeviation(r, AM))
    - "unit-gmidrange":  CenterScale(GMDR(k, m), MinkowskiDeviation(r, same))
    """
    if name == "center-mean":
        return Center(ArithmeticMean())
    if name == "center-min":
        return Center(Min())
    if name == "unit-mean":
        e = ArithmeticMean()
        return CenterScale(e, MinkowskiDeviation(r, e))
    if name == "unit-gmidrange":
        e = GeneralizedMidrange(k, m)
        return CenterScale(e, MinkowskiDeviation(r, e))
    raise SpecError(f"unknown preset {name!r}; expected one of {_PRESETS}")
