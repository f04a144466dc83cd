import numpy as np
import pytest

from shapeassoc import (
    REFLECT,
    LengthError,
    ScalarAffine,
    SeriesSet,
    ShapeError,
    SpecError,
    TimeSeries,
    affine,
    constant_series,
    is_constant,
    load_set,
    reflect,
)

from helpers import random_series, ts


class TestTimeSeries:
    def test_values_are_copied_and_frozen(self):
        raw = np.array([1.0, 2.0, 3.0])
        x = TimeSeries("a", raw)
        raw[0] = 99.0
        assert x.values[0] == 1.0
        with pytest.raises(ValueError):
            x.values[0] = 5.0

    def test_length_and_n(self):
        x = ts([1, 2, 3])
        assert len(x) == 3
        assert x.n == 3

    def test_rejects_short_series(self):
        with pytest.raises(LengthError):
            ts([1.0])

    def test_rejects_non_1d(self):
        with pytest.raises(ShapeError):
            TimeSeries("a", np.zeros((2, 2)))

    def test_rejects_non_finite_with_position(self):
        with pytest.raises(ValueError, match="position 1"):
            ts([1.0, float("nan"), 3.0])
        with pytest.raises(ValueError):
            ts([1.0, float("inf")])


class TestAffine:
    def test_pure_translation(self):
        assert np.array_equal(affine(ts([1, 2, 3]), ScalarAffine(1, 5)).values, [6, 7, 8])

    def test_reflection(self):
        assert np.array_equal(affine(ts([1, 2, 3]), ScalarAffine(-1, 0)).values, [-1, -2, -3])
        assert np.array_equal(reflect(ts([1, 2, 3])).values, [-1, -2, -3])
        assert REFLECT == ScalarAffine(-1.0, 0.0)

    def test_scale_and_offset(self):
        assert np.array_equal(affine(ts([1, 2, 3]), ScalarAffine(2, 1)).values, [3, 5, 7])

    def test_rejects_non_finite_parameters(self):
        with pytest.raises(ValueError):
            ScalarAffine(float("nan"), 0.0)
        with pytest.raises(ValueError):
            ScalarAffine(1.0, float("inf"))

    def test_composition(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            x = random_series(rng, int(rng.integers(2, 20)))
            p1, p2 = rng.uniform(-3, 3, size=2)
            q1, q2 = rng.uniform(-5, 5, size=2)
            once = affine(affine(x, ScalarAffine(p1, q1)), ScalarAffine(p2, q2))
            composed = affine(x, ScalarAffine(p1 * p2, p2 * q1 + q2))
            scale = np.maximum(1.0, np.abs(composed.values))
            assert np.all(np.abs(once.values - composed.values) / scale <= 1e-12)

    def test_reflection_involution_exact(self):
        rng = np.random.default_rng(12)
        x = random_series(rng, 17)
        assert np.array_equal(reflect(reflect(x)).values, x.values)


class TestConstant:
    def test_constant_series(self):
        assert np.array_equal(constant_series(0.0, 3).values, [0, 0, 0])
        assert np.array_equal(constant_series(2.5, 2).values, [2.5, 2.5])
        assert is_constant(constant_series(7.0, 4))

    def test_constant_series_too_short(self):
        with pytest.raises(LengthError):
            constant_series(1.0, 1)

    def test_is_constant(self):
        assert is_constant(ts([3, 3, 3]))
        assert not is_constant(ts([1, 2, 3]))

    def test_constancy_is_exact(self):
        # near-constant is not constant
        assert not is_constant(ts([1.0, 1.0 + 1e-15, 1.0]))

    def test_translated_constant_stays_constant(self):
        q = constant_series(4.0, 5)
        assert is_constant(affine(q, ScalarAffine(1.0, 3.7)))


class TestSeriesSet:
    def test_load_set_basic(self):
        s = load_set([(1, 2), (3, 4)])
        assert s.n == 2
        assert len(s) == 2
        assert s.ids == ("s1", "s2")

    def test_load_set_explicit_ids(self):
        s = load_set([(1, 2), (3, 4)], ids=["a", "b"])
        assert s.ids == ("a", "b")
        assert np.array_equal(s["b"].values, [3, 4])

    def test_mismatched_lengths(self):
        with pytest.raises(ShapeError):
            load_set([(1, 2), (3, 4, 5)])

    def test_non_finite_value(self):
        with pytest.raises(ValueError):
            load_set([(1.0, float("nan"))])

    def test_too_short(self):
        with pytest.raises(LengthError):
            load_set([(1.0,)])

    def test_empty_set_rejected(self):
        with pytest.raises(SpecError):
            SeriesSet(())

    def test_duplicate_ids_rejected(self):
        with pytest.raises(SpecError):
            SeriesSet((ts([1, 2], "a"), ts([3, 4], "a")))

    def test_lookup_by_index_and_id(self):
        s = load_set([(1, 2), (3, 4)])
        assert s[0] is s["s1"]
        assert "s2" in s
        assert "s9" not in s
        assert [x.id for x in s] == ["s1", "s2"]
        with pytest.raises(KeyError):
            s["missing"]
