"""Tabulated random hash values for integer keys."""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 16


class TabulatedHash:
    """Hash for non-negative integer keys drawn from a seeded PCG64 stream.

    Keys are grouped into chunks of ``CHUNK`` consecutive integers; each chunk
    gets its own generator derived from ``(seed, chunk)``. The value for a key
    therefore depends only on ``(seed, key, m)``, not on access order.
    """

    def __init__(self, m: int, seed: int = 0):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self.seed = seed
        self._chunks: dict[int, np.ndarray] = {}

    def _chunk(self, c: int) -> np.ndarray:
        values = self._chunks.get(c)
        if values is None:
            ss = np.random.SeedSequence(self.seed, spawn_key=(c,))
            rng = np.random.Generator(np.random.PCG64(ss))
            values = rng.integers(0, self.m, size=CHUNK, dtype=np.int64)
            self._chunks[c] = values
        return values

    def __call__(self, key: int) -> int:
        if key < 0:
            raise ValueError(f"keys must be non-negative integers, got {key!r}")
        return int(self._chunk(key // CHUNK)[key % CHUNK])

    def table(self, stop: int) -> np.ndarray:
        """Hash values of keys ``0 .. stop-1`` as an int64 array."""
        n_chunks = -(-stop // CHUNK)
        if n_chunks == 0:
            return np.empty(0, dtype=np.int64)
        return np.concatenate([self._chunk(c) for c in range(n_chunks)])[:stop]
