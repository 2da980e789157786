"""LHS degree: how close a design is to a Latin hypercube of its own size.

For a set of N samples in P dimensions, bin every dimension into N equal
intervals and count the occupied ones. The degree is

    D = (sum over dimensions of occupied bins) / (N * P)

which is 1 exactly when every bin of every dimension holds one sample, i.e.
when the set is a Latin hypercube. Occupancy is counted in integers and
divided once, so values such as 1 or 19/20 come out exact.

Predicted degree of an expansion
--------------------------------
Expanding N samples by M regrids every dimension into N + M bins. If the
originals occupy ``c_j`` of those bins in dimension ``j``, the M new samples
are placed one per previously empty bin, so the expanded set occupies
``c_j + M`` bins. The expanded degree is therefore

    sum_j (c_j + M) / ((N + M) * P)

which depends only on the original set and M, never on where the new
samples fall inside their bins.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import as_array, bin_indices

#: Least-squares constants of the general fit ``1 + a * (b + M/N) ** c``.
FIT_A = -0.167
FIT_B = 1.01
FIT_C = -2.99


@dataclass(frozen=True)
class OccupancyProfile:
    """Bin counts of a sample set on a k-bin grid per dimension.

    Attributes
    ----------
    k : int
        Bins per dimension.
    counts : ndarray, shape (P, k)
        ``counts[j, l]`` samples fall in bin ``l`` of dimension ``j``.
    """

    k: int
    counts: np.ndarray

    @property
    def p(self) -> int:
        return self.counts.shape[0]

    @property
    def n(self) -> int:
        return int(self.counts[0].sum())

    @property
    def occupied(self) -> np.ndarray:
        return np.count_nonzero(self.counts, axis=1)

    @property
    def empty(self) -> np.ndarray:
        return self.k - self.occupied

    def empty_bins(self, j: int) -> np.ndarray:
        """Indices of the empty bins of dimension ``j``, ascending."""
        return np.flatnonzero(self.counts[j] == 0)


def occupancy(data, k: int) -> OccupancyProfile:
    """Histogram every dimension of ``data`` on ``k`` equal bins."""
    arr = as_array(data)
    if k < 1:
        raise ValueError(f"bin count must be positive, got {k}")
    p = arr.shape[1]
    flat = (bin_indices(arr, k) + np.arange(p) * k).ravel()
    counts = np.bincount(flat, minlength=p * k).reshape(p, k)
    counts.setflags(write=False)
    return OccupancyProfile(k=k, counts=counts)


def degree_fraction(data) -> Fraction:
    """Exact degree as a fraction."""
    arr = as_array(data)
    n, p = arr.shape
    return Fraction(int(occupancy(arr, n).occupied.sum()), n * p)


def degree(data) -> float:
    """LHS degree in (0, 1]; 1 iff ``data`` is a Latin hypercube."""
    arr = as_array(data)
    n, p = arr.shape
    return int(occupancy(arr, n).occupied.sum()) / (n * p)


def predicted_degree_fraction(data, m: int) -> Fraction:
    arr = as_array(data)
    if m < 0:
        raise ValueError(f"expansion size must be non-negative, got {m}")
    n, p = arr.shape
    c = occupancy(arr, n + m).occupied
    return Fraction(int(c.sum()) + m * p, (n + m) * p)


def predicted_degree(data, m: int) -> float:
    """Degree the set will have after an expansion by ``m`` samples.

    Needs no sampling; see the module docstring for the counting argument.
    ``m = 0`` gives the degree of ``data`` itself.
    """
    frac = predicted_degree_fraction(data, m)
    return frac.numerator / frac.denominator


def fitted_degree(ratio: float) -> float:
    """Smooth approximation ``1 - 1/(6 (1 + M/N)^3)`` of the mean degree.

    Ignores the exact-1 spikes at integer multiples ``M = kN``.
    """
    if ratio < 0:
        raise ValueError(f"ratio M/N must be non-negative, got {ratio}")
    return 1.0 - 1.0 / (6.0 * (1.0 + ratio) ** 3)


def fitted_degree_general(ratio: float, a: float = FIT_A, b: float = FIT_B,
                          c: float = FIT_C) -> float:
    """``1 + a (b + ratio)^c``; defaults to the least-squares constants."""
    if ratio < 0:
        raise ValueError(f"ratio M/N must be non-negative, got {ratio}")
    return 1.0 + a * (b + ratio) ** c
