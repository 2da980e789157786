from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import degree_by_indicators

from elhs import (
    FIT_A, FIT_B, FIT_C, degree, fitted_degree, fitted_degree_general, occupancy,
    predicted_degree,
)
from elhs.degree import degree_fraction, predicted_degree_fraction

designs = st.integers(1, 12).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda p: st.lists(
            st.lists(st.floats(0.0, 1.0, exclude_max=True), min_size=p, max_size=p),
            min_size=n, max_size=n)))


def test_occupancy_examples():
    prof = occupancy([[0.1], [0.6]], 2)
    assert prof.counts.tolist() == [[1, 1]]
    assert prof.occupied.tolist() == [2] and prof.empty.tolist() == [0]
    prof = occupancy([[0.1], [0.2]], 2)
    assert prof.counts.tolist() == [[2, 0]]
    assert prof.occupied.tolist() == [1] and prof.empty.tolist() == [1]


def test_occupancy_of_lhs(lhs_factory):
    prof = occupancy(lhs_factory(3, 25, 5), 25)
    assert prof.occupied.tolist() == [25] * 3
    assert prof.empty.tolist() == [0] * 3


@given(designs, st.integers(1, 30))
def test_occupancy_invariants(rows, k):
    prof = occupancy(rows, k)
    n = len(rows)
    assert np.all(prof.counts.sum(axis=1) == n)
    assert np.all(prof.occupied + prof.empty == k)
    assert np.all(prof.occupied <= min(n, k))


def test_degree_examples(lhs_factory, fig1_design):
    assert degree(lhs_factory(2, 40, 1)) == 1.0
    assert degree([[0.1], [0.2]]) == 0.5


def test_degree_errors():
    with pytest.raises(ValueError):
        degree([[1.2]])


@given(designs)
def test_degree_matches_indicator_sum(rows):
    assert degree_fraction(rows) == degree_by_indicators(rows)
    d = degree(rows)
    assert 0 < d <= 1


@given(designs, st.randoms(use_true_random=False))
def test_degree_permutation_invariance(rows, rnd):
    arr = np.array(rows)
    rows_perm = rnd.sample(range(arr.shape[0]), arr.shape[0])
    cols_perm = rnd.sample(range(arr.shape[1]), arr.shape[1])
    assert degree(arr[rows_perm][:, cols_perm]) == degree(arr)


def test_degree_one_iff_lhs():
    assert degree([[0.1, 0.6], [0.7, 0.2]]) == 1.0
    assert degree([[0.1, 0.6], [0.2, 0.7]]) == 0.5
    assert degree([[0.1, 0.6], [0.7, 0.7]]) == 0.75


def test_predicted_degree_examples(lhs_factory):
    s = lhs_factory(3, 20, 2)
    assert predicted_degree(s, 0) == 1.0
    for k in (1, 2, 3):
        assert predicted_degree(s, k * 20) == 1.0
    assert predicted_degree([[0.05], [0.30]], 2) == 1.0


@settings(max_examples=50)
@given(designs, st.integers(0, 25))
def test_predicted_degree_bounds(rows, m):
    n = len(rows)
    c = occupancy(rows, n + m).occupied
    d = predicted_degree(rows, m)
    assert (c.min() + m) / (n + m) <= d <= (c.max() + m) / (n + m)
    assert d <= 1
    assert predicted_degree_fraction(rows, m) == Fraction(int(c.sum()) + m * len(rows[0]),
                                                          (n + m) * len(rows[0]))


def test_predicted_degree_rejects_negative():
    with pytest.raises(ValueError):
        predicted_degree([[0.5]], -1)


def test_fitted_degree_values():
    assert fitted_degree(0) == pytest.approx(1 - 1 / 6)
    assert fitted_degree(0) == pytest.approx(0.8333333333)
    assert fitted_degree(1) == pytest.approx(1 - 1 / 48)
    assert fitted_degree(1) == pytest.approx(0.97916666667)
    assert fitted_degree(1e6) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        fitted_degree(-0.1)


def test_fit_constants():
    assert (FIT_A, FIT_B, FIT_C) == (-0.167, 1.01, -2.99)
    # 1 - 0.167 * 1.01 ** -2.99 by hand
    assert fitted_degree_general(0) == pytest.approx(0.8378953, abs=1e-7)
    assert fitted_degree_general(1, a=-1 / 6, b=1, c=-3) == pytest.approx(fitted_degree(1))


@given(st.floats(0, 1e3), st.floats(0, 1e3))
def test_fitted_degree_monotone_bounded(a, b):
    lo, hi = sorted((a, b))
    assert 5 / 6 <= fitted_degree(lo) <= fitted_degree(hi) <= 1
    assert fitted_degree(lo) < 1 or lo > 1e5
