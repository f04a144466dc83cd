"""Composable shape association measures for time series.

Build a measure from parts (central estimate -> standardization -> Minkowski
dissimilarity -> association constructor), check it against the axioms it is
supposed to satisfy, and cluster series by absolute association.
"""

from .errors import (
    ConstantSeriesError,
    DatasetError,
    DomainError,
    LengthError,
    ShapeAssocError,
    ShapeError,
    SpecError,
)
from .series import (
    REFLECT,
    ScalarAffine,
    SeriesSet,
    TimeSeries,
    affine,
    constant_series,
    is_constant,
    load_set,
    reflect,
)
from .estimates import (
    ArithmeticMean,
    EstimateTraits,
    GeneralizedMidrange,
    Max,
    Median,
    Midrange,
    Min,
    MinkowskiDeviation,
    OrderStatistic,
    OrderedWeightedMean,
    Projection,
    Range,
    ScaleTraits,
    TruncatedMean,
    WeightedMean,
    central,
    estimate_traits,
    scale,
    scale_traits,
)
from .standardize import (
    Center,
    CenterScale,
    StandardizationFlags,
    flags,
    preset,
    standardize,
)
from .measures import (
    ComplementDecay,
    CosineStandardized,
    DissimilaritySpec,
    ExpDecay,
    GeneralizedMidrangeCorrelation,
    LinearComplement,
    MinkowskiBranch,
    MinkowskiContrast,
    OneMinus,
    Pearson,
    PowerHalf,
    RationalDecay,
    SimilarityBranch,
    SimilarityComplement,
    SimilarityDifference,
    SimilarityRecipe,
    abs_similarity,
    associate,
    association_matrix,
    decay,
    dissimilarity,
    grow,
    is_verified,
    similarity,
    to_distance,
)
from .axioms import (
    SAM_PROPERTIES,
    AbsSimilarity,
    Probe,
    PropertyId,
    PropertyReport,
    applicable_properties,
    coverage_suite,
    implication_checks,
    replay,
    subject_kind,
    verify,
)
from .cluster import (
    Dendrogram,
    MergeStep,
    SimilarityMatrix,
    contains_cluster,
    cut,
    single_linkage,
)
from .bench import (
    BenchmarkMeasure,
    BenchmarkSpec,
    FileDataset,
    SyntheticCluster,
    SyntheticDataset,
    default_grid_measures,
    default_synthetic_spec,
    generate_synthetic,
    run_benchmark,
)
from .datasets import parse_dataset, parse_dataset_text

__version__ = "0.1.0"
