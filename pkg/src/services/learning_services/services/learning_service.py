import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import null_space, qr

from src.constants.app_constants import LearningConst
from src.enums.enum import EtaPolicyEnum
from src.services.learning_services.models.learning_config import LearningConfig
from src.services.learning_services.models.learning_results import ClusterLearningResult, ConstraintResult
from src.services.learning_services.services.exceptions import (
    ConstraintRetryError,
    EmptyDatasetError,
    LearningConfigError,
    TooManyConstraintsError,
    ZeroNormError,
)
from src.services.learning_services.services.update_rules import (
    cluster_patterns,
    learn_step,
    penalty_gradient_exact,
    sub_pattern_cost,
)
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.utils.linalg_helper import exact_rank, real_rank
from src.utils.random_helper import derive_seed

_logger = logging.getLogger(__name__)


def resolve_alpha0(patterns: NDArray[np.float64], config: LearningConfig) -> float:
    """Configured alpha0, or 1 / max ||x||^2 so that alpha_t ||x||^2 <= alpha_decay."""
    if config.alpha0 is not None:
        alpha0 = config.alpha0
    else:
        largest = float(np.max(np.sum(patterns**2, axis=1))) if patterns.size else 0.0
        alpha0 = 1.0 / largest if largest > 0 else 1.0
    if config.eta_policy is EtaPolicyEnum.FIXED and alpha0 * config.eta >= 1:
        msg = f"alpha0 * eta = {alpha0 * config.eta} must stay below 1"
        raise LearningConfigError(msg)
    return alpha0


def _cutoff(unit: NDArray[np.float64], zero_epsilon: float | None) -> float:
    return LearningConst.RELATIVE_ZERO * float(np.max(np.abs(unit))) if zero_epsilon is None else zero_epsilon


def refine_on_support(
    w: NDArray[np.float64],
    patterns: NDArray[np.float64],
    zero_epsilon: float | None = None,
    *,
    full: bool = False,
) -> NDArray[np.float64] | None:
    """Project w onto the exact null space of the sub-patterns restricted to its support.

    The support is every entry above the sparsification cutoff (every entry when
    ``full``). Entries that the projection pushes under the cutoff leave the
    support and the projection is repeated, so the returned unit vector is a
    fixed point of ``sparsify``. Returns None when the projection keeps less
    than ``MIN_RETAINED`` of the supported part of w.
    """
    unit = w / np.linalg.norm(w)
    support = np.ones(unit.size, dtype=bool) if full else np.abs(unit) > _cutoff(unit, zero_epsilon)
    while support.any():
        restricted = unit[support]
        # same null space as the sub-patterns, without the C x C factor
        reduced = qr(patterns[:, support], mode="economic")[1]
        basis = null_space(reduced, rcond=LearningConst.NULL_SPACE_RCOND)
        projected = basis @ (basis.T @ restricted)
        retained = float(np.linalg.norm(projected))
        if retained <= LearningConst.MIN_RETAINED * float(np.linalg.norm(restricted)):
            return None
        unit = np.zeros_like(unit)
        unit[support] = projected / retained
        kept = np.abs(unit) > _cutoff(unit, zero_epsilon)
        if np.array_equal(kept, support):
            return unit
        support = kept
    return None


def sparsify(w: NDArray[np.float64], zero_epsilon: float | None = None) -> NDArray[np.float64]:
    """Zero small entries, make the largest entry positive and rescale to unit norm."""
    weights = w / np.linalg.norm(w)
    cutoff = _cutoff(weights, zero_epsilon)
    weights = np.where(np.abs(weights) <= cutoff, 0.0, weights)
    norm = np.linalg.norm(weights)
    if norm == 0.0:
        msg = f"every entry fell below the sparsification cutoff {cutoff}"
        raise ZeroNormError(msg)
    if weights[np.argmax(np.abs(weights))] < 0:
        weights = -weights
    return weights / norm


def _normalized_cost(w: NDArray[np.float64], patterns: NDArray[np.float64]) -> float:
    return sub_pattern_cost(w / np.linalg.norm(w), patterns)


def run_constraint(patterns: NDArray[np.float64], config: LearningConfig, seed: int) -> ConstraintResult:
    """One learning run from a random unit-norm start.

    Patterns are drawn uniformly with replacement, C draws per epoch. At the end
    of each epoch the iterate is refined with the shrink off: projected onto the
    exact null space of the sub-patterns on its surviving support during the
    first ``SPARSE_REFINE_EPOCHS`` epochs, on every entry afterwards and in the
    last epoch. The cost of that candidate (of the raw iterate when the
    projection is empty) is compared with epsilon_stop times the mean squared
    sub-pattern norm; the best vector seen is kept. The stochastic updates keep
    running from the raw iterate.
    """
    count, length = patterns.shape
    if count == 0:
        msg = "cannot learn a constraint from an empty dataset"
        raise EmptyDatasetError(msg)
    rng = np.random.default_rng(seed)
    alpha0 = resolve_alpha0(patterns, config)
    stop_cost = config.epsilon_stop * float(np.mean(np.sum(patterns**2, axis=1)))

    w = rng.standard_normal(length)
    w /= np.linalg.norm(w)
    best_w, best_cost = w.copy(), _normalized_cost(w, patterns)
    trace: list[float] = []
    min_norm = 1.0
    converged = False
    epochs = 0
    for epoch in range(1, config.max_epochs + 1):
        alpha_t = config.alpha(alpha0, epoch)
        theta_t = config.theta(epoch)
        eta_t = config.eta_at(alpha_t)
        for index in rng.integers(0, count, size=count):
            gradient = penalty_gradient_exact(w, config.sigma) if config.use_exact_gradient else None
            w = learn_step(w, patterns[index], alpha_t, eta_t, theta_t, gradient)
            norm = float(np.linalg.norm(w))
            min_norm = min(min_norm, norm)
            if norm == 0.0:
                msg = f"weights collapsed to zero in epoch {epoch}"
                raise ZeroNormError(msg)
            if config.normalize_each_step or not LearningConst.NORM_FLOOR <= norm <= LearningConst.NORM_CEILING:
                w = w / norm
        epochs = epoch
        full = epoch > LearningConst.SPARSE_REFINE_EPOCHS or epoch == config.max_epochs
        candidate = refine_on_support(w, patterns, config.zero_epsilon, full=full)
        epoch_w = w if candidate is None else candidate
        epoch_cost = _normalized_cost(epoch_w, patterns)
        trace.append(epoch_cost)
        if epoch_cost < best_cost:
            best_w, best_cost = epoch_w.copy(), epoch_cost
        if epoch_cost <= stop_cost:
            converged = True
            break
    if not converged:
        _logger.debug("Constraint run with seed %s stopped at cost %.3g after %s epochs", seed, best_cost, epochs)
    return ConstraintResult(
        weights=sparsify(best_w, config.zero_epsilon),
        trace=tuple(trace),
        converged=converged,
        epochs=epochs,
        min_norm=min_norm,
        seed=seed,
    )


def learn_constraint(
    dataset: Dataset,
    layout: ClusterLayout,
    cluster_id: int,
    config: LearningConfig,
) -> ConstraintResult:
    """Learn one vector orthogonal to every sub-pattern of the cluster."""
    return run_constraint(cluster_patterns(dataset, layout, cluster_id), config, config.seed)


def _is_new_direction(accepted: list[ConstraintResult], candidate: ConstraintResult, config: LearningConfig) -> bool:
    if not candidate.converged and not config.accept_unconverged:
        return False
    stacked = np.vstack([*(result.weights for result in accepted), candidate.weights])
    return real_rank(stacked, LearningConst.RANK_TOLERANCE) == len(accepted) + 1


def null_space_dimension(dataset: Dataset, layout: ClusterLayout, cluster_id: int) -> int:
    indices = layout.indices(cluster_id)
    return len(indices) - exact_rank(dataset.patterns[:, indices])


def learn_cluster_detailed(
    dataset: Dataset,
    layout: ClusterLayout,
    cluster_id: int,
    constraints: int,
    config: LearningConfig,
) -> ClusterLearningResult:
    """Learn ``constraints`` linearly independent rows for one cluster.

    The first run of every row starts in parallel; results are then merged in
    row order and a row that is dependent on the accepted ones (or did not
    converge) is re-run from the next derived seed.
    """
    patterns = cluster_patterns(dataset, layout, cluster_id)
    if constraints < 0:
        msg = f"constraint count must be nonnegative, got {constraints}"
        raise TooManyConstraintsError(msg)
    if constraints == 0:
        return ClusterLearningResult(SparseWeightMatrix.empty(cluster_id, patterns.shape[1]), (), 0)
    if dataset.count == 0:
        msg = "cannot learn constraints from an empty dataset"
        raise EmptyDatasetError(msg)
    available = null_space_dimension(dataset, layout, cluster_id)
    if constraints > available:
        msg = f"cluster {cluster_id} has a null space of dimension {available}, {constraints} constraints requested"
        raise TooManyConstraintsError(msg)

    def seed_for(row: int, attempt: int) -> int:
        return derive_seed(config.seed, cluster_id, row, attempt)

    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        first_runs = list(
            executor.map(lambda row: run_constraint(patterns, config, seed_for(row, 0)), range(constraints))
        )

    accepted: list[ConstraintResult] = []
    attempts = constraints
    for row, result in enumerate(first_runs):
        candidate, attempt = result, 0
        while not _is_new_direction(accepted, candidate, config):
            attempt += 1
            if attempt > config.max_retries:
                msg = f"cluster {cluster_id} row {row}: no independent constraint after {config.max_retries} retries"
                raise ConstraintRetryError(msg)
            candidate = run_constraint(patterns, config, seed_for(row, attempt))
            attempts += 1
        accepted.append(candidate)

    weights = SparseWeightMatrix.from_dense(
        cluster_id,
        np.vstack([result.weights for result in accepted]),
        config.zero_epsilon,
    )
    _logger.info(
        "Cluster %s: %s constraints, %s runs, %s stored weights",
        cluster_id,
        constraints,
        attempts,
        weights.nnz,
    )
    return ClusterLearningResult(weights, tuple(accepted), attempts)


def learn_cluster(
    dataset: Dataset,
    layout: ClusterLayout,
    cluster_id: int,
    constraints: int,
    config: LearningConfig,
) -> SparseWeightMatrix:
    return learn_cluster_detailed(dataset, layout, cluster_id, constraints, config).weights


def learn_network(
    dataset: Dataset,
    layout: ClusterLayout,
    config: LearningConfig,
    constraints: int | Sequence[int] | None = None,
    max_constraints: int | None = None,
) -> list[ClusterLearningResult]:
    """Learn every cluster; by default each gets its full null space dimension."""
    if isinstance(constraints, Sequence) and len(constraints) != layout.size:
        msg = f"expected {layout.size} constraint counts, got {len(constraints)}"
        raise TooManyConstraintsError(msg)
    results = []
    for cluster_id in range(layout.size):
        if constraints is None:
            count = null_space_dimension(dataset, layout, cluster_id)
        elif isinstance(constraints, Sequence):
            count = int(constraints[cluster_id])
        else:
            count = int(constraints)
        if max_constraints is not None:
            count = min(count, max_constraints)
        results.append(learn_cluster_detailed(dataset, layout, cluster_id, count, config))
    return results
