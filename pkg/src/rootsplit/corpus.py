"""Seeded, platform-independent random polynomial generation for batch runs.

The generator is SplitMix64: a 64-bit counter advanced by the golden-gamma
constant and finalized with two xor-multiply mixes.  It is tiny, well
studied, and produces identical streams on every platform and language,
which keeps batch reports reproducible across implementations.  Uniform
doubles take the top 53 bits of each output word.
"""

from __future__ import annotations

from .polynomial import Polynomial

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Deterministic 64-bit generator; same seed, same stream, anywhere."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, low: float, high: float) -> float:
        """Uniform double in [low, high) from the top 53 bits."""
        if not low <= high:
            raise ValueError(f"empty interval [{low}, {high})")
        fraction = (self.next_uint64() >> 11) * (2.0 ** -53)
        return low + fraction * (high - low)


def random_monic_polynomial(rng: SplitMix64, degree: int,
                            low: float = -10.0, high: float = 10.0) -> Polynomial:
    """Monic polynomial of the given degree with uniform random coefficients."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    coeffs = (1.0,) + tuple(rng.uniform(low, high) for _ in range(degree))
    return Polynomial(coeffs)
