import json

import pytest

from shapeassoc import (
    ArithmeticMean,
    Center,
    CenterScale,
    ComplementDecay,
    CosineStandardized,
    DissimilaritySpec,
    ExpDecay,
    GeneralizedMidrange,
    GeneralizedMidrangeCorrelation,
    LinearComplement,
    Median,
    Midrange,
    Min,
    MinkowskiBranch,
    MinkowskiContrast,
    MinkowskiDeviation,
    OneMinus,
    OrderStatistic,
    OrderedWeightedMean,
    Pearson,
    PowerHalf,
    Projection,
    Range,
    RationalDecay,
    SimilarityComplement,
    SimilarityDifference,
    SimilarityRecipe,
    SpecError,
    TruncatedMean,
    WeightedMean,
    preset,
)
from shapeassoc.config import (
    central_from_dict,
    central_to_dict,
    decay_from_dict,
    decay_to_dict,
    dissimilarity_from_dict,
    dissimilarity_to_dict,
    distance_transform_from_dict,
    distance_transform_to_dict,
    measure_from_dict,
    measure_to_dict,
    recipe_from_dict,
    recipe_to_dict,
    scale_from_dict,
    scale_to_dict,
    standardization_from_dict,
    standardization_to_dict,
    subject_to_dict,
)

CENTRALS = (
    Min(),
    Midrange(),
    Median(),
    ArithmeticMean(),
    Projection(3),
    OrderStatistic(2),
    TruncatedMean(2),
    GeneralizedMidrange(1, 3),
    WeightedMean((0.25, 0.75)),
    OrderedWeightedMean((0.5, 0.5)),
)

MEASURES = (
    Pearson(),
    CosineStandardized(preset("unit-mean")),
    GeneralizedMidrangeCorrelation(0, 2),
    MinkowskiBranch(DissimilaritySpec(2.0, preset("unit-mean")), RationalDecay(1.0)),
    MinkowskiContrast(DissimilaritySpec(2.0, preset("unit-gmidrange")), PowerHalf(2.0)),
    SimilarityDifference(
        SimilarityRecipe(
            DissimilaritySpec(2.0, preset("unit-mean")), ComplementDecay(PowerHalf(2.0), 2.0)
        )
    ),
    SimilarityComplement(
        SimilarityRecipe(DissimilaritySpec(1.0, Center(Median())), ExpDecay())
    ),
)


class TestRoundTrips:
    def test_central_estimates(self):
        for spec in CENTRALS:
            d = central_to_dict(spec)
            json.dumps(d)
            assert central_from_dict(d) == spec

    def test_scale_estimates(self):
        for spec in (Range(), MinkowskiDeviation(2.0, ArithmeticMean()), MinkowskiDeviation(1.5, Median())):
            assert scale_from_dict(scale_to_dict(spec)) == spec

    def test_standardizations(self):
        for spec in (
            Center(Median()),
            CenterScale(Midrange(), Range()),
            preset("unit-mean"),
            preset("unit-gmidrange", r=3.0, k=1, m=3),
        ):
            assert standardization_from_dict(standardization_to_dict(spec)) == spec

    def test_decays_and_transforms(self):
        for spec in (RationalDecay(2.5), ExpDecay(), ComplementDecay(PowerHalf(1.5), 2.0)):
            assert decay_from_dict(decay_to_dict(spec)) == spec
        for spec in (LinearComplement(3.0), OneMinus()):
            assert distance_transform_from_dict(distance_transform_to_dict(spec)) == spec

    def test_dissimilarity_and_recipe(self):
        dis = DissimilaritySpec(3.0, preset("unit-mean", r=3.0))
        assert dissimilarity_from_dict(dissimilarity_to_dict(dis)) == dis
        recipe = SimilarityRecipe(dis, RationalDecay(0.5))
        assert recipe_from_dict(recipe_to_dict(recipe)) == recipe

    def test_measures(self):
        for spec in MEASURES:
            d = measure_to_dict(spec)
            json.dumps(d)
            assert measure_from_dict(d) == spec

    def test_round_trip_survives_json(self):
        for spec in MEASURES:
            again = measure_from_dict(json.loads(json.dumps(measure_to_dict(spec))))
            assert again == spec


class TestShorthands:
    def test_preset_names(self):
        assert standardization_from_dict("unit-mean") == preset("unit-mean")
        assert standardization_from_dict(
            {"kind": "preset", "name": "unit-gmidrange", "m": 3}
        ) == preset("unit-gmidrange", m=3)

    def test_measure_shorthands(self):
        assert measure_from_dict("pearson") == Pearson()
        assert measure_from_dict("cosine") == CosineStandardized(preset("unit-mean"))
        assert measure_from_dict("gmidrange-correlation") == GeneralizedMidrangeCorrelation(0, 2)
        with pytest.raises(SpecError):
            measure_from_dict("spearman")

    def test_default_parameters(self):
        spec = measure_from_dict(
            {
                "kind": "minkowski-branch",
                "dissimilarity": {"r": 2.0, "standardization": "unit-mean"},
            }
        )
        assert spec.decay == RationalDecay(1.0)


class TestStrictness:
    def test_unknown_keys_rejected(self):
        with pytest.raises(SpecError, match="unknown keys"):
            central_from_dict({"kind": "median", "extra": 1})
        with pytest.raises(SpecError, match="unknown keys"):
            measure_from_dict({"kind": "pearson", "bogus": True})
        with pytest.raises(SpecError, match="unknown keys"):
            standardization_from_dict({"kind": "center", "center": {"kind": "median"}, "x": 0})

    def test_unknown_kinds_rejected(self):
        with pytest.raises(SpecError):
            central_from_dict({"kind": "mode"})
        with pytest.raises(SpecError):
            measure_from_dict({"kind": "spearman"})
        with pytest.raises(SpecError):
            decay_from_dict({"kind": "gaussian"})

    def test_missing_keys_rejected(self):
        with pytest.raises(SpecError, match="missing required key"):
            measure_from_dict({"kind": "cosine"})
        with pytest.raises(SpecError, match="missing required key"):
            dissimilarity_from_dict({"standardization": "unit-mean"})

    def test_wrong_container_types(self):
        with pytest.raises(SpecError):
            central_from_dict(["median"])
        with pytest.raises(SpecError):
            measure_from_dict(42)

    def test_invalid_parameters_propagate(self):
        # construction rules still apply on the parse path
        with pytest.raises(SpecError):
            measure_from_dict(
                {
                    "kind": "minkowski-contrast",
                    "dissimilarity": {"r": 2.0, "standardization": "center-mean"},
                }
            )


class TestSubjectDescription:
    def test_subjects(self):
        assert subject_to_dict(Pearson())["subject"] == "association"
        dis = DissimilaritySpec(2.0, preset("unit-mean"))
        assert subject_to_dict(dis)["subject"] == "dissimilarity"
        recipe = SimilarityRecipe(dis, RationalDecay(1.0))
        assert subject_to_dict(recipe)["subject"] == "similarity"
