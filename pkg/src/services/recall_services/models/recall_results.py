from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray


class CorrectionResult(NamedTuple):
    pattern: NDArray[np.int64]
    satisfied: bool
    iterations: int


@dataclass(frozen=True)
class PeelEvent:
    """One cluster visit during a peeling round; ``changed_neurons`` are global indices."""

    round: int
    cluster: int
    attempted: bool
    succeeded: bool
    changed_neurons: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class PeelResult:
    pattern: NDArray[np.int64]
    success: bool
    rounds: int
    events: tuple[PeelEvent, ...]
