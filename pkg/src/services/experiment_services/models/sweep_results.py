from dataclasses import dataclass


@dataclass(frozen=True)
class SweepPoint:
    """Error counts at one noise probability; symbol errors are counted over every trial's n entries."""

    p_e: float
    trials: int
    pattern_errors: int
    symbol_errors: int
    n: int

    @property
    def per(self) -> float:
        return self.pattern_errors / self.trials

    @property
    def ser(self) -> float:
        return self.symbol_errors / (self.trials * self.n) if self.n else 0.0

    def to_row(self) -> dict:
        return {
            "p_e": self.p_e,
            "trials": self.trials,
            "pattern_errors": self.pattern_errors,
            "PER": self.per,
            "symbol_errors": self.symbol_errors,
            "SER": self.ser,
        }
