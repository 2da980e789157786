import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elhs import bin_indices, degree, sample_lhs
from elhs.rng import RngStream


def test_single_point():
    s = sample_lhs(3, 1, RngStream(4))
    assert s.shape == (1, 3)
    assert degree(s) == 1.0


def test_fig1_size():
    s = sample_lhs(2, 7, RngStream(0))
    assert s.shape == (7, 2)
    assert degree(s) == 1.0


@settings(max_examples=60)
@given(st.integers(1, 8), st.integers(1, 150), st.integers(0, 2**64 - 1))
def test_projection_property(p, n, seed):
    s = sample_lhs(p, n, RngStream(seed))
    for j in range(p):
        assert sorted(bin_indices(s.data[:, j], n).tolist()) == list(range(n))
    assert degree(s) == 1.0


def test_deterministic():
    a = sample_lhs(4, 33, RngStream(77))
    b = sample_lhs(4, 33, 77)
    assert a.data.tobytes() == b.data.tobytes()
    assert sample_lhs(4, 33, 78) != a


def test_marginal_mean():
    n, p, draws = 5, 3, 2000
    means = np.array([sample_lhs(p, n, RngStream(1).spawn(r)).data.mean(axis=0)
                      for r in range(draws)])
    grand = means.mean(axis=0)
    # a stratified mean has variance 1/(12 n^3); use it as sigma for one draw
    sigma = np.sqrt(1.0 / (12 * n**3) / draws)
    assert np.all(np.abs(grand - 0.5) < 3 * sigma + 1e-12)


@pytest.mark.parametrize("p,n", [(0, 3), (2, 0)])
def test_rejects_empty(p, n):
    with pytest.raises(ValueError):
        sample_lhs(p, n, 0)
