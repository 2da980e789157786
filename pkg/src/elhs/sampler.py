"""Classic Latin hypercube sampling on the unit hypercube."""

from __future__ import annotations

import numpy as np

from .core import SampleSet, place
from .rng import RngStream


def sample_lhs(p: int, n: int, rng: RngStream | int | None = None) -> SampleSet:
    """Draw a Latin hypercube LHS(p, n).

    Column ``j`` is ``(perm_j + u_j) / n`` with ``perm_j`` a Fisher-Yates
    permutation of ``0..n-1`` and ``u_j`` uniform jitter in [0, 1), so every
    one of the ``n`` strata holds exactly one sample in every dimension.

    Draw order: the ``p`` permutations first (dimension by dimension), then
    the ``n x p`` jitters in row-major order.

    Parameters
    ----------
    p : int
        Number of dimensions.
    n : int
        Number of samples.
    rng : RngStream or int, optional
        Random stream, or a seed to build one from.

    Returns
    -------
    SampleSet
    """
    if p < 1 or n < 1:
        raise ValueError(f"need p >= 1 and n >= 1, got p={p}, n={n}")
    if not isinstance(rng, RngStream):
        rng = RngStream(rng)
    perms = np.column_stack([rng.permutation(n) for _ in range(p)])
    jitter = rng.random((n, p))
    return SampleSet(place(perms, jitter, n))
