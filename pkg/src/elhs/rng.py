"""Seedable deterministic random stream.

The generator is Philox4x64-10 (counter based, 256-bit counter, 128-bit
key) as exposed by ``numpy.random.Philox``. The 64-bit seed is used as the
key and the counter starts at zero, so the raw 64-bit output stream is fully
determined by the seed and identical across platforms. Every derived draw
(uniform doubles, bounded integers, permutations) is computed here from the
raw stream rather than through ``numpy.random.Generator`` whose algorithms
are allowed to change between numpy releases.

Derived quantities
------------------
* uniform double: ``(raw >> 11) * 2**-53``, in [0, 1)
* integer in [0, s): Lemire's multiply-shift with rejection (unbiased)
* permutation: Fisher-Yates, for i = n-1 .. 1 swap a[i] with a[j],
  j uniform in [0, i]
* child streams: ``child_seed = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15)``
"""

from __future__ import annotations

import secrets

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_BLOCK = 512


def splitmix64(x: int) -> int:
    """Finalizer of the SplitMix64 generator, used to derive child seeds."""
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th child of a stream seeded with ``seed``."""
    if index < 0:
        raise ValueError("child index must be non-negative")
    return splitmix64(seed + (index + 1) * _GOLDEN)


def entropy_seed() -> int:
    """A fresh 64-bit seed from system entropy."""
    return secrets.randbits(64)


class RngStream:
    """Deterministic stream of random draws.

    Not safe for concurrent use; give each worker its own child stream via
    :meth:`spawn`.

    Parameters
    ----------
    seed : int, optional
        Unsigned 64-bit seed. ``None`` draws one from system entropy; the
        value actually used is available as :attr:`seed`.
    """

    def __init__(self, seed: int | None = None):
        if seed is None:
            seed = entropy_seed()
        seed = int(seed)
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._bitgen = np.random.Philox(key=seed)
        self._buf = np.empty(0, dtype=np.uint64)
        self._pos = 0

    def __repr__(self):
        return f"RngStream(seed={self.seed})"

    def spawn(self, index: int) -> RngStream:
        """Independent child stream; depends only on ``(seed, index)``."""
        return RngStream(derive_seed(self.seed, index))

    def _refill(self, need: int) -> None:
        rest = self._buf[self._pos:]
        fresh = self._bitgen.random_raw(max(_BLOCK, need - rest.size))
        self._buf = np.concatenate([rest, fresh])
        self._pos = 0

    def raw(self, size: int) -> np.ndarray:
        """Next ``size`` raw 64-bit outputs as a uint64 array."""
        if self._buf.size - self._pos < size:
            self._refill(size)
        out = self._buf[self._pos:self._pos + size]
        self._pos += size
        return out

    def next_u64(self) -> int:
        if self._pos >= self._buf.size:
            self._refill(1)
        value = int(self._buf[self._pos])
        self._pos += 1
        return value

    def random(self, size=None):
        """Uniform doubles in [0, 1). ``size`` may be an int or a shape."""
        if size is None:
            return (self.next_u64() >> 11) * 2.0**-53
        shape = (size,) if np.isscalar(size) else tuple(size)
        count = int(np.prod(shape, dtype=np.int64))
        values = (self.raw(count) >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return values.reshape(shape)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        m = self.next_u64() * bound
        low = m & MASK64
        if low < bound:
            threshold = ((1 << 64) - bound) % bound
            while low < threshold:
                m = self.next_u64() * bound
                low = m & MASK64
        return m >> 64

    def shuffle(self, items: list) -> list:
        """Fisher-Yates shuffle of ``items`` in place; returns ``items``."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, n: int) -> np.ndarray:
        return np.array(self.shuffle(list(range(n))), dtype=np.int64)

    def choose(self, pool, k: int) -> list:
        """``k`` distinct elements of ``pool``, uniform over k-subsets.

        Runs the first ``k`` steps of a forward Fisher-Yates shuffle.
        """
        items = list(pool)
        if not 0 <= k <= len(items):
            raise ValueError(f"cannot choose {k} of {len(items)} items")
        if k == len(items):
            return items
        for i in range(k):
            j = i + self.below(len(items) - i)
            items[i], items[j] = items[j], items[i]
        return items[:k]
