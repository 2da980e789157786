"""Expand an existing Latin hypercube by M samples ("LHS in LHS").

Algorithm for N samples in P dimensions and M new ones:

1. regrid: bin every dimension into N + M intervals. The N originals
   occupy at most N of them, so at least M bins per dimension are empty.
2. select voids: in every dimension independently pick M of the empty bins
   uniformly at random.
3. inner LHS: pair the selected voids across dimensions with one random
   permutation per dimension and jitter a new sample inside each, giving an
   M-point Latin hypercube on the void subgrid. The new rows are appended.

Optimized expansions draw several candidates from child streams of the
configured seed and keep the one with the lowest centered L2 discrepancy or
the largest minimum distance, scored on the full expanded set.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import SampleSet, as_array, place
from .degree import OccupancyProfile, degree, occupancy, predicted_degree
from .discrepancy import centered_l2, geometric
from .rng import RngStream, entropy_seed

#: Upper bound on expansion sizes accepted by :func:`optimal_expansion`.
MAX_EXPANSION = 10**6

THREADS_ENV = "ELHS_THREADS"


class Optimize(enum.Enum):
    NONE = "none"
    CENTERED = "centered_discrepancy"
    GEOMETRIC = "geometric_discrepancy"

    @classmethod
    def parse(cls, value) -> Optimize:
        if value is None:
            return cls.NONE
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        aliases = {
            "none": cls.NONE,
            "centered": cls.CENTERED,
            "discrepancy": cls.CENTERED,
            "centered_discrepancy": cls.CENTERED,
            "centered_l2": cls.CENTERED,
            "geometric": cls.GEOMETRIC,
            "geometric_discrepancy": cls.GEOMETRIC,
            "maximin": cls.GEOMETRIC,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown optimization target {value!r}") from None

    def score(self, data) -> float:
        if self is Optimize.GEOMETRIC:
            return geometric(data)
        return centered_l2(data)

    def better(self, a: float, b: float) -> bool:
        """True if score ``a`` is strictly better than ``b``."""
        return a > b if self is Optimize.GEOMETRIC else a < b

    def meets(self, value: float, tolerance: float) -> bool:
        return value >= tolerance if self is Optimize.GEOMETRIC else value <= tolerance


@dataclass(frozen=True)
class ExpansionConfig:
    """Parameters of :func:`expand`.

    ``m = 0`` is accepted and returns the input unchanged. ``tolerance``
    stops the candidate search at the first candidate whose score is at or
    below it (centered) or at or above it (geometric). ``seed = None``
    draws a seed from system entropy; the one used is reported back in the
    result.
    """

    m: int
    optimize: Optimize = Optimize.NONE
    candidates: int = 100
    tolerance: float | None = None
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "optimize", Optimize.parse(self.optimize))
        if int(self.m) != self.m or self.m < 0:
            raise ValueError(f"expansion size must be a non-negative integer, got {self.m}")
        if self.candidates < 1:
            raise ValueError(f"candidate budget must be positive, got {self.candidates}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")


@dataclass(frozen=True)
class ExpansionResult:
    expanded: SampleSet
    measured_degree: float
    metric_value: float | None
    candidates_evaluated: int
    seed: int | None = None
    n_original: int = 0

    @property
    def new_samples(self) -> np.ndarray:
        """Rows appended by the expansion."""
        return self.expanded.data[self.n_original:]


def worker_count() -> int:
    """Worker threads allowed by ``ELHS_THREADS`` (0 or unset: serial)."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 0
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return max(value, 0)


def parallel_map(fn, items, workers: int | None = None) -> list:
    """``[fn(x) for x in items]``, on a thread pool when workers > 1.

    Results always come back in input order.
    """
    items = list(items)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def regrid(data, m: int) -> OccupancyProfile:
    """Occupancy of ``data`` on the (N + m)-bin grid."""
    arr = as_array(data)
    if m < 0:
        raise ValueError(f"expansion size must be non-negative, got {m}")
    profile = occupancy(arr, arr.shape[0] + m)
    if (profile.empty < m).any():
        raise AssertionError("regrid left fewer empty bins than new samples")
    return profile


def select_voids(profile: OccupancyProfile, m: int, rng: RngStream) -> list[np.ndarray]:
    """Pick ``m`` empty bins per dimension, uniformly without replacement.

    Each returned index array is sorted ascending.
    """
    voids = []
    for j in range(profile.p):
        empty = profile.empty_bins(j)
        if empty.size < m:
            raise AssertionError(
                f"dimension {j} has {empty.size} empty bins, fewer than m={m}"
            )
        chosen = rng.choose(empty.tolist(), m)
        voids.append(np.array(sorted(chosen), dtype=np.int64))
    return voids


def inner_lhs(voids, m: int, grid_k: int, rng: RngStream) -> np.ndarray:
    """Latin hypercube of ``m`` points on the subgrid spanned by ``voids``.

    Sample ``i`` gets bin ``voids[j][perm_j[i]]`` in dimension ``j`` and a
    uniform jitter inside it. Draw order: one permutation per dimension,
    then the ``m x P`` jitters row-major.
    """
    cols = []
    for j, bins in enumerate(voids):
        bins = np.asarray(bins, dtype=np.int64)
        if bins.size != m:
            raise ValueError(f"dimension {j} supplies {bins.size} voids, expected {m}")
        if np.unique(bins).size != m:
            raise ValueError(f"duplicate void bins in dimension {j}")
        if m and (bins.min() < 0 or bins.max() >= grid_k):
            raise ValueError(f"void bin outside [0, {grid_k - 1}] in dimension {j}")
        cols.append(bins[rng.permutation(m)])
    if m == 0:
        return np.empty((0, len(voids)))
    assigned = np.column_stack(cols)
    jitter = rng.random((m, len(voids)))
    return place(assigned, jitter, grid_k)


def _draw(arr: np.ndarray, m: int, rng: RngStream) -> np.ndarray:
    """One expansion of ``arr``; returns the full (n + m) x P array."""
    profile = regrid(arr, m)
    voids = select_voids(profile, m, rng)
    new = inner_lhs(voids, m, profile.k, rng)
    return np.vstack([arr, new])


def expand(data, config: ExpansionConfig | int, **kwargs) -> ExpansionResult:
    """Expand ``data`` by ``config.m`` samples.

    ``config`` may also be given as the expansion size with the remaining
    :class:`ExpansionConfig` fields as keyword arguments.

    Candidate ``i`` is drawn from child stream ``i`` of the seed; the
    unoptimized expansion is candidate 0. The selected candidate is the best
    score, ties going to the lowest index, so serial and threaded runs agree.

    Returns
    -------
    ExpansionResult
        The first N rows of ``expanded`` are the input rows, bit for bit.
    """
    if not isinstance(config, ExpansionConfig):
        config = ExpansionConfig(m=config, **kwargs)
    elif kwargs:
        raise TypeError("pass either an ExpansionConfig or keyword fields, not both")
    arr = as_array(data)
    m = int(config.m)
    mode = config.optimize
    seed = entropy_seed() if config.seed is None else config.seed
    root = RngStream(seed)

    if m == 0:
        value = None if mode is Optimize.NONE else mode.score(arr)
        return ExpansionResult(SampleSet(arr), degree(arr), value, 0, seed, arr.shape[0])

    if mode is Optimize.NONE:
        out = _draw(arr, m, root.spawn(0))
        return ExpansionResult(SampleSet(out), degree(out), None, 1, seed, arr.shape[0])

    def candidate(i):
        out = _draw(arr, m, root.spawn(i))
        return out, mode.score(out)

    workers = worker_count()
    batch = max(workers, 1)
    best = best_value = None
    evaluated = 0
    for start in range(0, config.candidates, batch):
        stop = min(start + batch, config.candidates)
        for out, value in parallel_map(candidate, range(start, stop), workers):
            evaluated += 1
            if best is None or mode.better(value, best_value):
                best, best_value = out, value
            if config.tolerance is not None and mode.meets(value, config.tolerance):
                return ExpansionResult(SampleSet(best), degree(best), best_value,
                                       evaluated, seed, arr.shape[0])
    return ExpansionResult(SampleSet(best), degree(best), best_value, evaluated, seed,
                           arr.shape[0])


def expand_unitary(data, m: int, rng: RngStream | int | None = None) -> ExpansionResult:
    """Add ``m`` samples one at a time, regridding after every step."""
    if m < 1:
        raise ValueError(f"expansion size must be positive, got {m}")
    if not isinstance(rng, RngStream):
        rng = RngStream(rng)
    arr = as_array(data)
    n = arr.shape[0]
    for _ in range(m):
        arr = _draw(arr, 1, rng)
    return ExpansionResult(SampleSet(arr), degree(arr), None, m, rng.seed, n)


def optimal_expansion(data, m_range, verbose: bool = False):
    """Rank expansion sizes by the degree they would produce.

    Parameters
    ----------
    data : SampleSet or array-like
        Design to be expanded.
    m_range : (int, int)
        Inclusive range of candidate expansion sizes.
    verbose : bool
        If True, return every ``(m, degree)`` pair, including the ``m = 0``
        reference, best first (ties: smaller m first). Otherwise return the
        best pair with ``m`` inside ``m_range``.

    No samples are drawn: degrees come from :func:`predicted_degree`.
    """
    arr = as_array(data)
    lo, hi = (int(v) for v in m_range)
    if lo > hi:
        raise ValueError(f"empty expansion range [{lo}, {hi}]")
    if lo < 0 or hi > MAX_EXPANSION:
        raise ValueError(f"expansion range must lie within [0, {MAX_EXPANSION}]")
    in_range = [(m, predicted_degree(arr, m)) for m in range(lo, hi + 1)]
    if not verbose:
        return min(in_range, key=lambda e: (-e[1], e[0]))
    entries = in_range if lo == 0 else [(0, predicted_degree(arr, 0))] + in_range
    return sorted(entries, key=lambda e: (-e[1], e[0]))
