from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from elhs import SampleSet, ValidationError, bin_index, bin_indices, validate
from elhs.core import place

BELOW_ONE = np.nextafter(1.0, 0.0)


def test_validate_accepts_in_range():
    arr = validate([[0.1, 0.9], [0.5, 0.0]])
    assert arr.shape == (2, 2)


def test_validate_rejects_one():
    with pytest.raises(ValidationError) as err:
        validate([[1.0]])
    assert (err.value.row, err.value.column, err.value.value) == (0, 0, 1.0)


def test_validate_reports_location():
    with pytest.raises(ValidationError) as err:
        validate([[0.5, -0.1]])
    assert (err.value.row, err.value.column) == (0, 1)
    assert "row 0, column 1" in str(err.value)


@pytest.mark.parametrize("bad", [
    [[0.1, 0.2], [0.3]],
    [],
    [[]],
    np.zeros((0, 3)),
    np.zeros((3, 0)),
    np.zeros(4),
    [[float("nan")]],
])
def test_validate_rejects_malformed(bad):
    with pytest.raises(ValidationError):
        validate(bad)


def test_sample_set_is_immutable_copy():
    src = np.array([[0.1, 0.2]])
    s = SampleSet(src)
    src[0, 0] = 0.9
    assert s.data[0, 0] == 0.1
    with pytest.raises(ValueError):
        s.data[0, 0] = 0.3
    assert (s.n, s.p) == (1, 2)


def test_sample_set_append_keeps_rows():
    s = SampleSet([[0.1, 0.2]])
    t = s.append([[0.3, 0.4]])
    assert t.n == 2 and s.n == 1
    assert np.array_equal(t.data[:1], s.data)


def test_bin_index_examples():
    assert bin_index(0.0, 10) == 0
    assert bin_index(BELOW_ONE, 10) == 9
    assert bin_index(0.35, 10) == 3
    assert bin_index(0.999, 10) == 9


def test_bin_index_errors():
    with pytest.raises(ValueError):
        bin_index(1.0, 10)
    with pytest.raises(ValueError):
        bin_index(-0.0001, 10)
    with pytest.raises(ValueError):
        bin_index(0.5, 0)


@given(st.floats(0.0, 1.0, exclude_max=True), st.integers(1, 10**6))
def test_bin_index_brackets_x(x, k):
    b = bin_index(x, k)
    assert 0 <= b < k
    assert Fraction(b, k) <= Fraction(x) < Fraction(b + 1, k)
    assert bin_indices(np.array([x]), k)[0] == b


@given(st.integers(1, 5000), st.data())
def test_place_lands_in_bin(k, data):
    bins = np.array(data.draw(st.lists(st.integers(0, k - 1), min_size=1, max_size=20)))
    jitter = np.array(data.draw(st.lists(st.floats(0.0, 1.0, exclude_max=True),
                                         min_size=len(bins), max_size=len(bins))))
    x = place(bins, jitter, k)
    assert np.all((x >= 0) & (x < 1))
    assert np.array_equal(bin_indices(x, k), bins)


def test_place_guards_top_edge():
    x = place(np.array([9]), np.array([BELOW_ONE]), 10)
    assert x[0] < 1.0 and bin_index(x[0], 10) == 9


def test_bin_index_exact_product():
    third = 1 / 3  # slightly below 1/3, but fl(third * 9) == 3.0
    assert third * 9 == 3.0
    assert bin_index(third, 9) == 2
    assert bin_indices(np.array([third]), 9)[0] == 2
    assert bin_index(0.3, 10) == 2  # fl(0.3) < 3/10
    assert bin_index(0.5, 2) == 1


@given(st.floats(0.0, 1.0, exclude_max=True), st.integers(1, 2**40))
def test_vectorized_binning_matches_exact(x, k):
    assert bin_indices(np.array([x]), k)[0] == bin_index(x, k)
