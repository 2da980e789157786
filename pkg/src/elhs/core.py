"""Sample sets in the half-open unit hypercube and binning arithmetic."""

from __future__ import annotations


import numpy as np


class ValidationError(ValueError):
    """Raised when coordinates do not form a valid sample set.

    ``row``, ``column`` and ``value`` locate the offending coordinate when
    the problem is a single out-of-range entry; they are ``None`` otherwise.
    """

    def __init__(self, message, row=None, column=None, value=None):
        super().__init__(message)
        self.row = row
        self.column = column
        self.value = value


def validate(data) -> np.ndarray:
    """Check that ``data`` is an N x P array of coordinates in [0, 1).

    Returns the coordinates as a float64 array; raises
    :class:`ValidationError` otherwise.
    """
    if isinstance(data, SampleSet):
        return data.data
    if isinstance(data, np.ndarray):
        arr = data
    else:
        rows = list(data)
        widths = {len(r) if hasattr(r, "__len__") else -1 for r in rows}
        if len(widths) > 1:
            raise ValidationError(f"ragged rows: found widths {sorted(widths)}")
        arr = np.array(rows)
    if arr.ndim != 2:
        raise ValidationError(f"expected a 2-D array, got shape {arr.shape}")
    n, p = arr.shape
    if n == 0 or p == 0:
        raise ValidationError(f"empty sample set (n={n}, p={p})")
    arr = np.asarray(arr, dtype=np.float64)
    bad = ~((arr >= 0.0) & (arr < 1.0))
    if bad.any():
        row, col = (int(i) for i in np.argwhere(bad)[0])
        value = float(arr[row, col])
        raise ValidationError(
            f"coordinate {value!r} at row {row}, column {col} is outside [0, 1)",
            row=row, column=col, value=value,
        )
    return arr


class SampleSet:
    """Immutable N x P design in [0, 1)^P.

    Row order is significant: expansions append rows and never move the
    original ones.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(validate(data), dtype=np.float64, copy=True)
        arr.setflags(write=False)
        self._data = arr

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def n(self) -> int:
        return self._data.shape[0]

    @property
    def p(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._data
        return self._data.astype(dtype)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, SampleSet):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self):
        return hash((self.shape, self._data.tobytes()))

    def __repr__(self):
        return f"SampleSet(n={self.n}, p={self.p})"

    def append(self, rows) -> SampleSet:
        """New set with ``rows`` appended after the current ones."""
        rows = np.asarray(rows, dtype=np.float64).reshape(-1, self.p)
        return SampleSet(np.vstack([self._data, rows]))


def as_array(data) -> np.ndarray:
    """Validated float64 view of a SampleSet or array-like."""
    return data.data if isinstance(data, SampleSet) else validate(data)


def bin_index(x: float, k: int) -> int:
    """Index of the bin [l/k, (l+1)/k) holding ``x``.

    Computed as the floor of the exact product ``x*k``, clamped to ``k-1``.
    """
    if k < 1:
        raise ValueError(f"bin count must be positive, got {k}")
    if not 0.0 <= x < 1.0:
        raise ValueError(f"coordinate {x!r} is outside [0, 1)")
    num, den = float(x).as_integer_ratio()
    return min(num * k // den, k - 1)


_SPLITTER = 134217729.0  # 2**27 + 1


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def bin_indices(data, k: int) -> np.ndarray:
    """Vectorized :func:`bin_index` over an array of valid coordinates.

    ``fl(x*k)`` can round up onto an integer the exact product falls short
    of (x = fl(1/3), k = 9 gives 3.0). The rounding error of the product is
    recovered with Dekker's two-product and such values are moved down one
    bin, so the result is floor of the exact product.
    """
    if k < 1:
        raise ValueError(f"bin count must be positive, got {k}")
    x = np.asarray(data, dtype=np.float64)
    kf = float(k)
    prod = x * kf
    xh, xl = _split(x)
    kh, kl = _split(kf)
    err = ((xh * kh - prod) + xh * kl + xl * kh) + xl * kl
    floor = np.floor(prod)
    idx = floor.astype(np.int64) - ((prod == floor) & (err < 0))
    return np.minimum(idx, k - 1)


def place(bins, jitter, k: int) -> np.ndarray:
    """Coordinates ``(bins + jitter) / k`` guaranteed to land in ``bins``.

    Rounding can push ``(l + u)/k`` onto 1.0 or into a neighbouring bin as
    seen by :func:`bin_indices`; such values are stepped back one ulp at a
    time until they bin correctly.
    """
    bins = np.asarray(bins, dtype=np.int64)
    x = (bins + np.asarray(jitter, dtype=np.float64)) / k
    x = np.minimum(x, np.nextafter(1.0, 0.0))
    for _ in range(64):
        got = bin_indices(x, k)
        if np.array_equal(got, bins):
            return x
        x = np.where(got > bins, np.nextafter(x, 0.0), x)
        x = np.where(got < bins, np.nextafter(x, 1.0), x)
    raise RuntimeError("could not place coordinates inside their bins")
