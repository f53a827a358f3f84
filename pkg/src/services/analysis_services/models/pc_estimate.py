import math
from dataclasses import dataclass

from src.constants.app_constants import AnalysisConst


@dataclass(frozen=True)
class PcEstimate:
    """Empirical single-error correction rate with a 95% normal half-width."""

    rate: float
    half_width: float
    trials: int
    successes: int

    @classmethod
    def from_counts(cls, successes: int, trials: int) -> "PcEstimate":
        rate = successes / trials
        return cls(
            rate=rate,
            half_width=AnalysisConst.CONFIDENCE_Z * math.sqrt(rate * (1.0 - rate) / trials),
            trials=trials,
            successes=successes,
        )

    @property
    def standard_error(self) -> float:
        return math.sqrt(self.rate * (1.0 - self.rate) / self.trials)
