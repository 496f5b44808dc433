"""Deterministic randomness for every stochastic operation.

All draws come from counter-based Philox streams, so a given (seed, draw
sequence) reproduces bit-identically on any platform. Training code draws
in a documented order: per matrix, row-major, matrices in layer order.
Independent concerns (weight init, mask sampling, batch shuffling, data
augmentation) use named child streams so that, e.g., two runs that share a
seed also share their initialisation regardless of which regulariser is
active.
"""

import zlib

import numpy as np

_U64 = 0xFFFFFFFFFFFFFFFF


class Rng:
    """Counter-based PRNG stream with named substreams.

    ``seed`` is a 64-bit key; ``draws`` counts scalar values drawn so far
    (the stream position). Re-creating an Rng with the same seed and
    replaying the same call sequence reproduces every value exactly.
    """

    def __init__(self, seed: int):
        self.seed = int(seed) & _U64
        self._gen = np.random.Generator(np.random.Philox(key=self.seed))
        self.draws = 0

    def child(self, tag: str) -> "Rng":
        """Derive an independent stream keyed by (seed, tag).

        The tag is hashed with crc32 (stable across platforms and runs,
        unlike the builtin ``hash``).
        """
        mixed = (self.seed * 0x9E3779B97F4A7C15 + zlib.crc32(tag.encode("utf-8"))) & _U64
        return Rng(mixed)

    def uniform(self, shape=None) -> np.ndarray:
        """Uniform [0, 1) draws, row-major element order."""
        out = self._gen.random(size=shape, dtype=np.float64)
        self.draws += int(np.size(out))
        return out

    def normal(self, shape=None, std: float = 1.0) -> np.ndarray:
        out = self._gen.normal(loc=0.0, scale=std, size=shape)
        self.draws += int(np.size(out))
        return out

    def integers(self, low: int, high: int, shape=None) -> np.ndarray:
        """Integers in [low, high), like ``Generator.integers``."""
        out = self._gen.integers(low, high, size=shape)
        self.draws += int(np.size(out))
        return out

    def permutation(self, n: int) -> np.ndarray:
        out = self._gen.permutation(n)
        self.draws += n
        return out
