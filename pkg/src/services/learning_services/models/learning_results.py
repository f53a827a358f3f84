from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.services.memory_model.models.weight_matrix import SparseWeightMatrix


@dataclass(frozen=True, eq=False)
class ConstraintResult:
    """Outcome of one constraint run.

    Attributes:
        weights: Sparsified, unit-norm constraint vector (largest entry positive)
        trace: Normalized cost after each epoch
        converged: Whether the cost reached epsilon_stop
        epochs: Epochs actually run
        min_norm: Smallest ||w|| seen before any renormalization
        seed: Seed the run was started from
    """

    weights: NDArray[np.float64]
    trace: tuple[float, ...]
    converged: bool
    epochs: int
    min_norm: float
    seed: int


@dataclass(frozen=True, eq=False)
class ClusterLearningResult:
    weights: SparseWeightMatrix
    constraints: tuple[ConstraintResult, ...]
    attempts: int
