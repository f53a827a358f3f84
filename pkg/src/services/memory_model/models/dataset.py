from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.services.memory_model.services.exceptions import InvalidDatasetError


@dataclass(frozen=True, eq=False)
class Dataset:
    """C integer patterns of length n over the alphabet {0..Q-1}."""

    patterns: NDArray[np.int64]
    alphabet_size: int

    def __post_init__(self) -> None:
        patterns = np.array(self.patterns, dtype=np.int64, copy=True)
        if patterns.ndim == 1 and patterns.size == 0:
            patterns = patterns.reshape(0, 0)
        if patterns.ndim != 2:  # noqa: PLR2004
            msg = f"patterns must be a C x n matrix, got shape {patterns.shape}"
            raise InvalidDatasetError(msg)
        if self.alphabet_size < 2:  # noqa: PLR2004
            msg = f"alphabet size must be at least 2, got {self.alphabet_size}"
            raise InvalidDatasetError(msg)
        if patterns.size and (patterns.min() < 0 or patterns.max() > self.alphabet_size - 1):
            msg = f"pattern entries must lie in [0, {self.alphabet_size - 1}]"
            raise InvalidDatasetError(msg)
        patterns.setflags(write=False)
        object.__setattr__(self, "patterns", patterns)

    @classmethod
    def from_rows(cls, rows: ArrayLike, alphabet_size: int) -> "Dataset":
        return cls(np.asarray(rows, dtype=np.int64), alphabet_size)

    @property
    def n(self) -> int:
        return int(self.patterns.shape[1])

    @property
    def count(self) -> int:
        return int(self.patterns.shape[0])

    def __len__(self) -> int:
        return self.count
