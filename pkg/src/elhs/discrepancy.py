"""Uniformity scores for ranking candidate designs.

``centered_l2`` is Hickernell's centered L2 discrepancy (lower is more
uniform); ``geometric`` is the smallest pairwise Euclidean distance (higher
is better spread).
"""

from __future__ import annotations

import numpy as np

from .core import as_array


def centered_l2_squared(data) -> float:
    """Squared centered L2 discrepancy.

    CD^2 = (13/12)^P
           - 2/N   sum_i     prod_j [1 + |z_ij|/2 - z_ij^2/2]
           + 1/N^2 sum_i,k   prod_j [1 + |z_ij|/2 + |z_kj|/2 - |x_ij - x_kj|/2]

    with ``z = x - 1/2``. O(N^2 P) time, O(N^2) memory.
    """
    x = as_array(data)
    n, p = x.shape
    z = np.abs(x - 0.5)
    single = np.prod(1.0 + 0.5 * z - 0.5 * z * z, axis=1).sum()
    pair = np.ones((n, n))
    for j in range(p):
        col = x[:, j]
        zj = z[:, j]
        pair *= 1.0 + 0.5 * zj[:, None] + 0.5 * zj[None, :] - 0.5 * np.abs(col[:, None] - col[None, :])
    value = (13.0 / 12.0) ** p - 2.0 / n * single + pair.sum() / (n * n)
    return max(float(value), 0.0)


def centered_l2(data) -> float:
    """Centered L2 discrepancy (the square root of :func:`centered_l2_squared`)."""
    return float(np.sqrt(centered_l2_squared(data)))


def geometric(data) -> float:
    """Minimum Euclidean distance between two distinct rows of ``data``."""
    x = as_array(data)
    n = x.shape[0]
    if n < 2:
        raise ValueError("geometric discrepancy needs at least two samples")
    best = np.inf
    for i in range(n - 1):
        d2 = ((x[i + 1:] - x[i]) ** 2).sum(axis=1).min()
        if d2 < best:
            best = d2
    return float(np.sqrt(best))
