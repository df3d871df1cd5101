"""Per-chunk delay model for the relay.

Log-normal, parametrised straight from the measured profile: the median
pins mu, the mean pins sigma. Only those two moments are honoured; tests
check them within 20%.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..rng import SplitMix64

DEFAULT_MEDIAN_MS = 98.0
DEFAULT_MEAN_MS = 242.0


@dataclass
class LatencyModel:
    median_ms: float = DEFAULT_MEDIAN_MS
    mean_ms: float = DEFAULT_MEAN_MS
    enabled: bool = True

    def __post_init__(self) -> None:
        if self.median_ms <= 0 or self.mean_ms < self.median_ms:
            raise ValueError("need 0 < median <= mean")
        self.mu = math.log(self.median_ms)
        self.sigma = math.sqrt(2.0 * math.log(self.mean_ms / self.median_ms))

    def sample_ms(self, rng: SplitMix64) -> float:
        """One inter-chunk delay in milliseconds, always >= 0."""
        if not self.enabled:
            return 0.0
        return math.exp(self.mu + self.sigma * rng.gauss())
