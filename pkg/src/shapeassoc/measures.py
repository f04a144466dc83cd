"""Dissimilarities, similarity transforms, and association measures.

The pipeline: standardize both series with F, take the Minkowski distance of
order r, then turn distances into similarities or signed associations.

    D(x, y) = (sum_i |F(x)_i - F(y)_i| ** r) ** (1/r)

Signed association can be built two ways:

- branch form: compare D(x, y) against D(x, -y); report the decayed
  similarity of the closer orientation, with the sign of that orientation.
  Sound whenever F is odd (so F(-y) = -F(y)) and translation invariant.
- contrast form: W(D(x, -y)) - W(D(x, y)) for an increasing W with
  W(0) = 0 and W(2) = 1. Sound when F is additionally r-normal
  (sum |F(x)_i|**r = 1), which caps D at 2.

Validated constructors (MinkowskiBranch, MinkowskiContrast) refuse
standardizations that break these preconditions. The Similarity* constructors
accept any recipe unchecked; the axiom harness exists to catch bad ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ConstantSeriesError, DomainError, ShapeError, SpecError
from .estimates import GeneralizedMidrange, central_values
from .series import SeriesSet, TimeSeries, is_constant
from .standardize import (
    Standardization,
    flags,
    length_bounds,
    standardize_values,
)

_BRANCH_TIE_TOL = 1e-12


@dataclass(frozen=True)
class DissimilaritySpec:
    """Minkowski distance of order r between standardized series."""

    r: float
    standardization: Standardization

    def __post_init__(self):
        if not (np.isfinite(self.r) and self.r >= 1.0):
            raise SpecError(f"Minkowski order must be >= 1, got {self.r!r}")


# --- transforms between dissimilarity and similarity ------------------------


@dataclass(frozen=True)
class RationalDecay:
    """S = k / (d + k): slow rational decay from 1 toward 0."""

    k: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.k) and self.k > 0.0):
            raise SpecError(f"decay constant must be > 0, got {self.k!r}")


@dataclass(frozen=True)
class ExpDecay:
    """S = exp(-d)."""


@dataclass(frozen=True)
class PowerHalf:
    """Increasing map W(d) = (d / 2) ** p with W(0) = 0 and W(2) = 1."""

    p: float = 2.0

    def __post_init__(self):
        if not (np.isfinite(self.p) and self.p > 0.0):
            raise SpecError(f"power must be > 0, got {self.p!r}")


GrowthTransform = Union[PowerHalf]


@dataclass(frozen=True)
class ComplementDecay:
    """S = 1 - W(d) for d in [0, cap]; exact 0 at the cap.

    Unlike the strictly positive decays, this one reaches similarity 0, which
    is what the difference-form association needs for reflected pairs.
    """

    growth: GrowthTransform = PowerHalf(2.0)
    cap: float = 2.0

    def __post_init__(self):
        if not (np.isfinite(self.cap) and self.cap > 0.0):
            raise SpecError(f"cap must be > 0, got {self.cap!r}")
        if grow(self.growth, self.cap) > 1.0 + 1e-12:
            raise SpecError("growth transform must stay within [0, 1] up to the cap")


DecayTransform = Union[RationalDecay, ExpDecay, ComplementDecay]


@dataclass(frozen=True)
class LinearComplement:
    """D = k * (1 - s), mapping similarity 1 to distance 0."""

    k: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.k) and self.k > 0.0):
            raise SpecError(f"slope must be > 0, got {self.k!r}")


@dataclass(frozen=True)
class OneMinus:
    """D = 1 - s."""


DistanceTransform = Union[LinearComplement, OneMinus]


def decay(spec: DecayTransform, d: float) -> float:
    """Similarity from dissimilarity; strictly decreasing with value 1 at 0."""
    if d < 0.0:
        raise DomainError(f"dissimilarity must be >= 0, got {d!r}")
    if isinstance(spec, RationalDecay):
        return spec.k / (d + spec.k)
    if isinstance(spec, ExpDecay):
        return float(np.exp(-d))
    if isinstance(spec, ComplementDecay):
        if d > spec.cap * (1.0 + 1e-12):
            raise DomainError(f"dissimilarity {d!r} exceeds the transform cap {spec.cap!r}")
        return 1.0 - grow(spec.growth, min(d, spec.cap))
    raise SpecError(f"unknown decay transform {spec!r}")


def grow(spec: GrowthTransform, d: float) -> float:
    """Increasing map used by the contrast form; 0 at 0, 1 at 2."""
    if d < 0.0:
        raise DomainError(f"dissimilarity must be >= 0, got {d!r}")
    if isinstance(spec, PowerHalf):
        return float((d / 2.0) ** spec.p)
    raise SpecError(f"unknown growth transform {spec!r}")


def to_distance(spec: DistanceTransform, s: float) -> float:
    """Dissimilarity from similarity; value 0 at similarity 1."""
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"similarity must be in [0, 1], got {s!r}")
    if isinstance(spec, LinearComplement):
        return spec.k * (1.0 - s)
    if isinstance(spec, OneMinus):
        return 1.0 - s
    raise SpecError(f"unknown distance transform {spec!r}")


# --- dissimilarity and similarity evaluation ---------------------------------


def _check_pair(x: TimeSeries, y: TimeSeries) -> None:
    if x.n != y.n:
        raise ShapeError(f"series {x.id!r} (n={x.n}) and {y.id!r} (n={y.n}) differ in length")


def _minkowski(diff: np.ndarray, r: float) -> float:
    a = np.abs(diff)
    if r == 1.0:
        return float(a.sum())
    if r == 2.0:
        return float(np.sqrt(np.dot(a, a)))
    return float((a ** r).sum() ** (1.0 / r))


def dissimilarity_values(spec: DissimilaritySpec, vx: np.ndarray, vy: np.ndarray) -> float:
    fx = standardize_values(spec.standardization, vx)
    fy = standardize_values(spec.standardization, vy)
    return _minkowski(fx - fy, spec.r)


def dissimilarity(spec: DissimilaritySpec, x: TimeSeries, y: TimeSeries) -> float:
    """D(x, y) >= 0, zero exactly for identically standardized series."""
    _check_pair(x, y)
    return dissimilarity_values(spec, x.values, y.values)


@dataclass(frozen=True)
class SimilarityRecipe:
    """Similarity S(x, y) = decay(D(x, y)). Unvalidated building block."""

    dissim: DissimilaritySpec
    decay: DecayTransform


def similarity(spec: SimilarityRecipe, x: TimeSeries, y: TimeSeries) -> float:
    _check_pair(x, y)
    return decay(spec.decay, dissimilarity_values(spec.dissim, x.values, y.values))


# --- association constructors -------------------------------------------------


def _require_branch_preconditions(standardization: Standardization, what: str) -> None:
    f = flags(standardization)
    if not f.translation_invariant:
        raise SpecError(f"{what} needs a translation-invariant standardization")
    if not f.odd:
        raise SpecError(
            f"{what} needs an odd standardization (center and spread estimates "
            "that commute with negation); got a non-odd one"
        )


@dataclass(frozen=True)
class MinkowskiBranch:
    """Signed association by orientation branch on Minkowski distances.

    A(x, y) = decay(D(x, y)) when x is closer to y than to -y, the negated
    value for the reflected orientation, and 0 on a tie.
    """

    dissim: DissimilaritySpec
    decay: DecayTransform = RationalDecay(1.0)

    def __post_init__(self):
        _require_branch_preconditions(self.dissim.standardization, "branch association")


@dataclass(frozen=True)
class MinkowskiContrast:
    """Signed association by contrast of grown distances.

    A(x, y) = grow(D(x, -y)) - grow(D(x, y)). Needs an r-normal odd
    standardization so both terms stay in [0, 1].
    """

    dissim: DissimilaritySpec
    growth: GrowthTransform = PowerHalf(2.0)

    def __post_init__(self):
        _require_branch_preconditions(self.dissim.standardization, "contrast association")
        f = flags(self.dissim.standardization)
        if f.normality_order != self.dissim.r:
            raise SpecError(
                "contrast association needs the standardization to be normal at the "
                f"distance order {self.dissim.r!r} (spread = Minkowski deviation of the "
                "same center at that order)"
            )


@dataclass(frozen=True)
class SimilarityBranch:
    """Branch association driven by a similarity recipe, preconditions unchecked."""

    recipe: SimilarityRecipe


@dataclass(frozen=True)
class SimilarityDifference:
    """A(x, y) = S(x, y) - S(x, -y), preconditions unchecked.

    Sound only when reflected pairs reach similarity exactly 0; with decays
    that never reach 0 the result fails reflexivity.
    """

    recipe: SimilarityRecipe


@dataclass(frozen=True)
class SimilarityComplement:
    """A(x, y) = 2 * S(x, y) - 1, preconditions unchecked.

    Sound only when S satisfies the complement rule S(-x, y) = 1 - S(x, y).
    """

    recipe: SimilarityRecipe


@dataclass(frozen=True)
class Pearson:
    """Product-moment correlation of the raw samples."""


@dataclass(frozen=True)
class CosineStandardized:
    """Cosine of the standardized vectors."""

    standardization: Standardization


@dataclass(frozen=True)
class GeneralizedMidrangeCorrelation:
    """Correlation with the generalized midrange in place of the mean.

    Centers both series by GMDR(k, m) and takes the cosine of the centered
    vectors. With k=0, m=1 the center is the midrange.
    """

    k: int = 0
    m: int = 2

    def __post_init__(self):
        # parameter sanity is delegated to the estimate
        GeneralizedMidrange(self.k, self.m)


MeasureSpec = Union[
    MinkowskiBranch,
    MinkowskiContrast,
    SimilarityBranch,
    SimilarityDifference,
    SimilarityComplement,
    Pearson,
    CosineStandardized,
    GeneralizedMidrangeCorrelation,
]


def is_verified(spec: MeasureSpec) -> bool:
    """True when construction-time validation already guarantees soundness.

    Similarity-route constructors are intentionally unchecked; run the axiom
    harness on them before trusting results.
    """
    if isinstance(spec, (MinkowskiBranch, MinkowskiContrast, Pearson, GeneralizedMidrangeCorrelation)):
        return True
    if isinstance(spec, CosineStandardized):
        return flags(spec.standardization).odd
    return False


def measure_standardization(spec: MeasureSpec) -> Standardization | None:
    """The standardization a measure evaluates through, if any."""
    if isinstance(spec, (MinkowskiBranch, MinkowskiContrast)):
        return spec.dissim.standardization
    if isinstance(spec, (SimilarityBranch, SimilarityDifference, SimilarityComplement)):
        return spec.recipe.dissim.standardization
    if isinstance(spec, CosineStandardized):
        return spec.standardization
    return None


def measure_length_bounds(spec: MeasureSpec) -> tuple[int, int | None]:
    """(minimum length, exact length or None) the measure accepts."""
    std = measure_standardization(spec)
    if std is not None:
        return length_bounds(std)
    if isinstance(spec, GeneralizedMidrangeCorrelation):
        return 2 * spec.m + 1, None
    return 2, None


def _branch_value(d_same: float, d_reflected: float, s_spec: DecayTransform) -> float:
    tol = _BRANCH_TIE_TOL * max(1.0, d_same, d_reflected)
    if abs(d_same - d_reflected) <= tol:
        return 0.0
    if d_same < d_reflected:
        return decay(s_spec, d_same)
    return -decay(s_spec, d_reflected)


def _pearson_values(vx: np.ndarray, vy: np.ndarray) -> float:
    dx = vx - vx.mean()
    dy = vy - vy.mean()
    denom = np.sqrt(np.dot(dx, dx) * np.dot(dy, dy))
    if denom == 0.0:
        raise ConstantSeriesError("correlation is undefined for a constant series")
    return float(np.dot(dx, dy) / denom)


def _cosine(fx: np.ndarray, fy: np.ndarray) -> float:
    denom = np.sqrt(np.dot(fx, fx) * np.dot(fy, fy))
    if denom == 0.0:
        raise ConstantSeriesError("cosine is undefined when a standardized series is zero")
    return float(np.dot(fx, fy) / denom)


def associate_values(spec: MeasureSpec, vx: np.ndarray, vy: np.ndarray) -> float:
    if np.all(vx == vx[0]) or np.all(vy == vy[0]):
        raise ConstantSeriesError("association is undefined for constant series")
    if isinstance(spec, MinkowskiBranch):
        d_same = dissimilarity_values(spec.dissim, vx, vy)
        d_reflected = dissimilarity_values(spec.dissim, vx, -vy)
        return _branch_value(d_same, d_reflected, spec.decay)
    if isinstance(spec, MinkowskiContrast):
        d_same = dissimilarity_values(spec.dissim, vx, vy)
        d_reflected = dissimilarity_values(spec.dissim, vx, -vy)
        return grow(spec.growth, d_reflected) - grow(spec.growth, d_same)
    if isinstance(spec, SimilarityBranch):
        d_same = dissimilarity_values(spec.recipe.dissim, vx, vy)
        d_reflected = dissimilarity_values(spec.recipe.dissim, vx, -vy)
        return _branch_value(d_same, d_reflected, spec.recipe.decay)
    if isinstance(spec, SimilarityDifference):
        d_same = dissimilarity_values(spec.recipe.dissim, vx, vy)
        d_reflected = dissimilarity_values(spec.recipe.dissim, vx, -vy)
        return decay(spec.recipe.decay, d_same) - decay(spec.recipe.decay, d_reflected)
    if isinstance(spec, SimilarityComplement):
        d_same = dissimilarity_values(spec.recipe.dissim, vx, vy)
        return 2.0 * decay(spec.recipe.decay, d_same) - 1.0
    if isinstance(spec, Pearson):
        return _pearson_values(vx, vy)
    if isinstance(spec, CosineStandardized):
        fx = standardize_values(spec.standardization, vx)
        fy = standardize_values(spec.standardization, vy)
        return _cosine(fx, fy)
    if isinstance(spec, GeneralizedMidrangeCorrelation):
        est = GeneralizedMidrange(spec.k, spec.m)
        fx = vx - central_values(est, vx)
        fy = vy - central_values(est, vy)
        return _cosine(fx, fy)
    raise SpecError(f"unknown measure {spec!r}")


def associate(spec: MeasureSpec, x: TimeSeries, y: TimeSeries) -> float:
    """Signed association in [-1, 1]; positive for similar shapes, negative
    for reflected ones."""
    _check_pair(x, y)
    return associate_values(spec, x.values, y.values)


def abs_similarity(spec: MeasureSpec, x: TimeSeries, y: TimeSeries) -> float:
    """|A(x, y)|: similarity of shape families {x, -x} vs {y, -y}."""
    return abs(associate(spec, x, y))


@dataclass(frozen=True, eq=False)
class AssociationMatrix:
    """Symmetric association matrix over a series set, unit diagonal."""

    ids: tuple[str, ...]
    values: np.ndarray


def association_matrix(spec: MeasureSpec, data: SeriesSet) -> AssociationMatrix:
    """Pairwise associations; symmetric by construction, diagonal exactly 1."""
    k = len(data)
    out = np.ones((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            try:
                a = associate(spec, data[i], data[j])
            except (ConstantSeriesError, SpecError, ShapeError) as exc:
                raise type(exc)(
                    f"pair ({data[i].id!r}, {data[j].id!r}): {exc}"
                ) from exc
            out[i, j] = a
            out[j, i] = a
    out.flags.writeable = False
    return AssociationMatrix(data.ids, out)


def constant_ids(data: SeriesSet) -> tuple[str, ...]:
    """Ids of constant series; these poison association matrices."""
    return tuple(s.id for s in data if is_constant(s))
