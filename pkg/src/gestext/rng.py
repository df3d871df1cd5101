"""Deterministic 64-bit RNG used everywhere randomness must replay identically.

SplitMix64: one 64-bit word of state, advanced by a fixed odd constant and
mixed through two xor-shift-multiply rounds. Chosen over ``random.Random``
because its byte-level output is pinned here, independent of interpreter
version or platform, which the replay and golden-file tests rely on.
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E9B5) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def uniform_int(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], both inclusive. Modulo bias is ~2^-61, far
        below anything the statistical tests can see."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def gauss(self) -> float:
        """Standard normal via Box-Muller (no caching, for replayability)."""
        u1 = self.uniform()
        while u1 <= 0.0:
            u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def fork(self, stream: int) -> "SplitMix64":
        """Independent child generator for a numbered stream."""
        child = SplitMix64(self._state ^ ((stream * _GAMMA) & _MASK))
        child.next_u64()
        return child
