"""Intra-cluster bit flipping: forward syndrome, backward feedback, thresholded updates."""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.constants.app_constants import RecallConst
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.models.recall_results import CorrectionResult
from src.services.recall_services.services.exceptions import DimensionMismatchError

_logger = logging.getLogger(__name__)


def default_sat_tol(W: SparseWeightMatrix) -> float:
    """1e-6 times the largest row 1-norm; 0 for an empty matrix."""
    if W.rows == 0 or W.nnz == 0:
        return 0.0
    return RecallConst.RELATIVE_SAT_TOL * float(np.abs(W.dense).sum(axis=1).max())


def resolve_sat_tol(W: SparseWeightMatrix, config: RecallConfig) -> float:
    return default_sat_tol(W) if config.sat_tol is None else config.sat_tol


def _check_length(W: SparseWeightMatrix, x_sub: NDArray) -> None:
    if x_sub.shape != (W.cols,):
        msg = f"sub-pattern shape {x_sub.shape} does not match cluster {W.cluster_id} width {W.cols}"
        raise DimensionMismatchError(msg)


def cluster_syndrome(
    W: SparseWeightMatrix,
    x_sub: ArrayLike,
    sat_tol: float | None = None,
) -> tuple[NDArray[np.float64], bool]:
    """h = W x and whether max|h| <= sat_tol (vacuously true without rows)."""
    values = np.asarray(x_sub, dtype=float)
    _check_length(W, values)
    h = W.dense @ values
    tol = default_sat_tol(W) if sat_tol is None else sat_tol
    return h, bool(h.size == 0 or np.max(np.abs(h)) <= tol)


def feedback(W: ArrayLike, h: ArrayLike, psi: float) -> NDArray[np.float64]:
    """g_j = sum_i W_ij y_i / sum_i |W_ij| with y_i = sign(h_i) when |h_i| > psi, else 0.

    Columns without weights get g_j = 0.
    """
    weights = np.asarray(W, dtype=float)
    syndrome = np.asarray(h, dtype=float)
    y = np.where(np.abs(syndrome) > psi, np.sign(syndrome), 0.0)
    numerator = (weights * y[:, None]).sum(axis=0)
    denominator = np.abs(weights).sum(axis=0)
    return np.divide(numerator, denominator, out=np.zeros_like(numerator), where=denominator > 0)


def intra_correct(
    W: SparseWeightMatrix,
    x_sub: ArrayLike,
    config: RecallConfig,
    Q: int | None = None,
) -> CorrectionResult:
    """Up to t_max rounds of x_j <- x_j - sign(g_j) wherever |g_j| > phi.

    Stops as soon as the cluster is satisfied, or when no neuron crosses phi.
    ``Q`` clamps updated states into [0, Q-1]; None leaves them unbounded.
    """
    state = np.array(x_sub, dtype=np.int64, copy=True)
    _check_length(W, state)
    tol = resolve_sat_tol(W, config)
    weights = W.dense
    for iteration in range(config.t_max):
        h = weights @ state
        if h.size == 0 or np.max(np.abs(h)) <= tol:
            return CorrectionResult(state, satisfied=True, iterations=iteration)
        g = feedback(weights, h, config.psi)
        movers = np.abs(g) > config.phi
        if not movers.any():
            return CorrectionResult(state, satisfied=False, iterations=iteration)
        state[movers] -= np.sign(g[movers]).astype(np.int64)
        if Q is not None:
            np.clip(state, 0, Q - 1, out=state)
    h = weights @ state
    satisfied = bool(h.size == 0 or np.max(np.abs(h)) <= tol)
    return CorrectionResult(state, satisfied=satisfied, iterations=config.t_max)


def has_distinct_neighborhoods(W: SparseWeightMatrix) -> bool:
    """True when no column's support is contained in another column's support.

    Under this condition a lone error is the only neuron whose feedback reaches
    |g| = 1, so any phi < 1 corrects it in one round.
    """
    supports = W.dense != 0
    if np.any(~supports.any(axis=0)):
        return False
    overlap = supports.T.astype(np.int64) @ supports.astype(np.int64)
    sizes = supports.sum(axis=0)
    contained = overlap == sizes[:, None]
    np.fill_diagonal(contained, val=False)
    return not contained.any()
