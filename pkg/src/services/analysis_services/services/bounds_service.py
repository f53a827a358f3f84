"""Single-error correction probability: closed-form bounds and Monte Carlo estimates."""

import logging
import math
from collections.abc import Sequence

import numpy as np
from numpy.polynomial import polynomial
from numpy.typing import ArrayLike

from src.enums.enum import PcModeEnum
from src.services.analysis_services.models.pc_estimate import PcEstimate
from src.services.analysis_services.services.exceptions import BoundDomainError, InvalidTrialsError
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.degree_service import node_degree_distribution
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.services.correction_service import intra_correct
from src.utils.random_helper import derive_rng, derive_seed

_logger = logging.getLogger(__name__)


def _check_shape(mean_degree: float, m: int, n: int) -> None:
    if n < 1 or m < 0:
        msg = f"need n >= 1 and m >= 0, got n={n}, m={m}"
        raise BoundDomainError(msg)
    if mean_degree < 0 or mean_degree > m:
        msg = f"mean degree {mean_degree} must lie in [0, m={m}]"
        raise BoundDomainError(msg)


def pc_lower_bound(node_lambda: ArrayLike, mean_degree: float, m: int, n: int) -> float:
    """(1 - Lambda(d/m))^(n-1), with Lambda the node degree polynomial of the cluster."""
    _check_shape(mean_degree, m, n)
    if n == 1:
        return 1.0
    ratio = mean_degree / m if m else 0.0
    value = float(polynomial.polyval(ratio, np.asarray(node_lambda, dtype=float)))
    return float((1.0 - value) ** (n - 1))


def pc_min_degree_bound(mean_degree: float, m: int, n: int, min_degree: int) -> float:
    """(1 - (d/m)^d_min)^(n-1); the weaker form that only uses the smallest degree."""
    _check_shape(mean_degree, m, n)
    if min_degree < 0:
        msg = f"minimum degree must be nonnegative, got {min_degree}"
        raise BoundDomainError(msg)
    if n == 1:
        return 1.0
    ratio = mean_degree / m if m else 0.0
    return float((1.0 - ratio**min_degree) ** (n - 1))


def zero_degree_floor(lambda_zero: float, n: int) -> float:
    """exp(-Lambda_0 n): large-n form of the bound when some neurons have no constraints."""
    if not 0.0 <= lambda_zero <= 1.0:
        msg = f"Lambda_0 must be a fraction, got {lambda_zero}"
        raise BoundDomainError(msg)
    return math.exp(-lambda_zero * n)


def cluster_pc_bound(W: SparseWeightMatrix) -> float:
    node_lambda, mean_degree = node_degree_distribution(W)
    return pc_lower_bound(node_lambda, mean_degree, W.rows, W.cols)


def sample_cluster_weights(
    node_lambda: ArrayLike,
    m: int,
    n: int,
    rng: np.random.Generator,
    cluster_id: int = 0,
) -> SparseWeightMatrix:
    """Random m x n cluster whose column degrees are drawn from Lambda.

    Each column picks its rows uniformly without replacement; values are
    uniform in [0.5, 1.5] with a random sign.
    """
    coefficients = np.asarray(node_lambda, dtype=float)
    if coefficients.size - 1 > m and np.any(coefficients[m + 1 :] > 0):
        msg = f"degree distribution puts mass above m={m}"
        raise BoundDomainError(msg)
    degrees = rng.choice(coefficients.size, size=n, p=coefficients / coefficients.sum())
    entries = []
    for col, degree in enumerate(degrees):
        rows = rng.choice(m, size=int(degree), replace=False) if degree else []
        values = rng.uniform(0.5, 1.5, size=len(rows)) * rng.choice([-1.0, 1.0], size=len(rows))
        entries.extend((int(row), col, float(value)) for row, value in zip(rows, values, strict=True))
    return SparseWeightMatrix.from_entries(cluster_id, m, n, entries)


def _single_error_corrected(
    W: SparseWeightMatrix,
    config: RecallConfig,
    rng: np.random.Generator,
    Q: int | None = None,
) -> bool:
    """Recall only sees W e, so the trial runs on a single error around the zero pattern.

    With ``Q`` the zero pattern sits on the lower edge of [0, Q-1]: a -1 error
    would be clipped away, so the error is +1 and corrections are clamped.
    """
    error = np.zeros(W.cols, dtype=np.int64)
    position, negative = int(rng.integers(W.cols)), rng.random() < 0.5  # noqa: PLR2004
    error[position] = -1 if negative and Q is None else 1
    result = intra_correct(W, error, config, Q)
    return result.satisfied and not result.pattern.any()


def _check_trials(trials: int) -> None:
    if trials < 1:
        msg = f"need at least one trial, got {trials}"
        raise InvalidTrialsError(msg)


def pc_monte_carlo(
    W: SparseWeightMatrix,
    config: RecallConfig,
    trials: int,
    seed: int,
    Q: int | None = None,
) -> PcEstimate:
    """Fraction of single +/-1 errors that one intra-cluster call removes; ``Q`` clamps as in recall."""
    _check_trials(trials)
    if W.cols == 0:
        return PcEstimate.from_counts(trials, trials)
    rng = np.random.default_rng(seed)
    successes = sum(_single_error_corrected(W, config, rng, Q) for _ in range(trials))
    return PcEstimate.from_counts(successes, trials)


def pc_ensemble_monte_carlo(
    node_lambda: ArrayLike,
    m: int,
    n: int,
    config: RecallConfig,
    trials: int,
    seed: int,
) -> PcEstimate:
    """Like ``pc_monte_carlo`` but with a fresh cluster drawn from Lambda for every trial."""
    _check_trials(trials)
    successes = 0
    for trial in range(trials):
        rng = derive_rng(seed, trial)
        W = sample_cluster_weights(node_lambda, m, n, rng)
        successes += _single_error_corrected(W, config, rng)
    return PcEstimate.from_counts(successes, trials)


def network_pc(
    mode: PcModeEnum,
    weights: Sequence[SparseWeightMatrix],
    config: RecallConfig,
    trials: int,
    seed: int,
    Q: int | None = None,
) -> float:
    """P_c for density evolution: 1, the mean closed-form bound, or the mean empirical rate."""
    if mode is PcModeEnum.ONE:
        return 1.0
    if not weights:
        msg = "weights are required to estimate P_c"
        raise BoundDomainError(msg)
    if mode is PcModeEnum.BOUND:
        values = [cluster_pc_bound(W) for W in weights]
    else:
        values = [
            pc_monte_carlo(W, config, trials, derive_seed(seed, cluster_id), Q).rate
            for cluster_id, W in enumerate(weights)
        ]
    pc = float(np.mean(values))
    _logger.info("P_c (%s) = %.6f over %s clusters", mode.value, pc, len(values))
    return pc
