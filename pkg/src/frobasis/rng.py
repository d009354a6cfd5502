"""Deterministic splitmix-style pseudo-random generator.

Seeds are plain integers and the stream is fixed for all time, so every
randomized routine in the package is exactly reproducible from its seed
argument alone, independent of platform or library versions.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """64-bit splitmix generator; uniform doubles from the top 53 bits."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, low: float = -1.0, high: float = 1.0) -> float:
        u = (self.next_uint64() >> 11) / float(1 << 53)  # [0, 1)
        return low + (high - low) * u

    def integer(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_uint64() % n

    def real_vector(self, n: int, low: float = -1.0, high: float = 1.0) -> np.ndarray:
        return np.array([self.uniform(low, high) for _ in range(n)])

    def complex_vector(self, n: int, low: float = -1.0, high: float = 1.0) -> np.ndarray:
        re = self.real_vector(n, low, high)
        im = self.real_vector(n, low, high)
        return re + 1j * im
