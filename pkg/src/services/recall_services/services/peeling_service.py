"""Sequential peeling over the contracted graph."""

import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.constants.app_constants import RecallConst
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.recall_services.models.contracted_graph import ContractedGraph
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.models.recall_results import PeelEvent, PeelResult
from src.services.recall_services.services.correction_service import (
    cluster_syndrome,
    default_sat_tol,
    intra_correct,
    resolve_sat_tol,
)
from src.services.recall_services.services.exceptions import DimensionMismatchError, MissingWeightsError

_logger = logging.getLogger(__name__)


def build_contracted(layout: ClusterLayout) -> ContractedGraph:
    return ContractedGraph(n=layout.n, super_nodes=layout.clusters, neuron_edges=layout.membership)


def _check_weights(weights: Sequence[SparseWeightMatrix], graph: ContractedGraph) -> None:
    if len(weights) != graph.size:
        msg = f"expected weights for {graph.size} clusters, got {len(weights)}"
        raise MissingWeightsError(msg)
    for cluster_id, W in enumerate(weights):
        if W.cols != len(graph.super_nodes[cluster_id]):
            msg = f"cluster {cluster_id} weights have {W.cols} columns for {len(graph.super_nodes[cluster_id])} neurons"
            raise MissingWeightsError(msg)


def unsatisfied_clusters(
    weights: Sequence[SparseWeightMatrix],
    graph: ContractedGraph,
    pattern: ArrayLike,
    config: RecallConfig,
) -> list[int]:
    state = np.asarray(pattern)
    return [
        cluster_id
        for cluster_id, W in enumerate(weights)
        if not cluster_syndrome(W, state[graph.indices(cluster_id)], resolve_sat_tol(W, config))[1]
    ]


def peel(
    weights: Sequence[SparseWeightMatrix],
    layout: ClusterLayout | ContractedGraph,
    x_hat: ArrayLike,
    config: RecallConfig,
    Q: int | None = None,
) -> PeelResult:
    """Round-robin over clusters, committing a cluster's correction only if it satisfies it.

    A failed attempt leaves the neurons of that cluster as they were when the
    attempt started. A correction that satisfies its cluster is still reverted
    when it would leave more clusters unsatisfied than before, so the
    unsatisfied count never rises. Peeling ends when every cluster is
    satisfied, when a full round commits nothing, or after ``peel_rounds_max``
    rounds.
    """
    graph = layout if isinstance(layout, ContractedGraph) else build_contracted(layout)
    _check_weights(weights, graph)
    state = np.array(x_hat, dtype=np.int64, copy=True)
    if state.shape != (graph.n,):
        msg = f"pattern shape {state.shape} does not match n={graph.n}"
        raise DimensionMismatchError(msg)
    tolerances = [resolve_sat_tol(W, config) for W in weights]

    def is_satisfied(cluster_id: int, values: NDArray[np.int64]) -> bool:
        sub_pattern = values[graph.indices(cluster_id)]
        return cluster_syndrome(weights[cluster_id], sub_pattern, tolerances[cluster_id])[1]

    satisfied = [is_satisfied(cluster_id, state) for cluster_id in range(graph.size)]
    events: list[PeelEvent] = []
    rounds = 0
    while not all(satisfied) and rounds < config.peel_rounds_max:
        rounds += 1
        committed = False
        for cluster_id, W in enumerate(weights):
            if satisfied[cluster_id]:
                events.append(PeelEvent(rounds, cluster_id, attempted=False, succeeded=False, changed_neurons=()))
                continue
            indices = graph.indices(cluster_id)
            result = intra_correct(W, state[indices], config, Q)
            succeeded = result.satisfied
            changed: tuple[int, ...] = ()
            if succeeded:
                moved = indices[result.pattern != state[indices]]
                candidate = state.copy()
                candidate[indices] = result.pattern
                touched = {cluster_id}.union(*(graph.neuron_edges[int(i)] for i in moved))
                after = {other: is_satisfied(other, candidate) for other in touched}
                if sum(not ok for ok in after.values()) > sum(not satisfied[other] for other in touched):
                    _logger.debug("Round %s: reverted cluster %s, it would unsatisfy a neighbor", rounds, cluster_id)
                    succeeded = False
                else:
                    state = candidate
                    for other, ok in after.items():
                        satisfied[other] = ok
                    changed = tuple(int(i) for i in moved)
                    committed = committed or bool(changed)
            events.append(PeelEvent(rounds, cluster_id, attempted=True, succeeded=succeeded, changed_neurons=changed))
        if not committed:
            break
    pending = [cluster_id for cluster_id, ok in enumerate(satisfied) if not ok]
    if pending:
        _logger.debug("Peeling failed after %s rounds with %s unsatisfied clusters", rounds, len(pending))
    return PeelResult(pattern=state, success=not pending, rounds=rounds, events=tuple(events))


def calibrate_sat_tol(
    weights: Sequence[SparseWeightMatrix],
    dataset: Dataset,
    layout: ClusterLayout,
    percentile: float = RecallConst.SAT_PERCENTILE,
) -> float:
    """Percentile of |h| pooled over every cluster and every noise-free pattern."""
    graph = build_contracted(layout)
    _check_weights(weights, graph)
    pooled = [
        np.abs(dataset.patterns[:, graph.indices(cluster_id)].astype(float) @ W.dense.T).ravel()
        for cluster_id, W in enumerate(weights)
        if W.rows
    ]
    values = np.concatenate(pooled) if pooled else np.zeros(0)
    if values.size == 0:
        return 0.0
    tol = float(np.percentile(values, percentile))
    _logger.info("Calibrated syndrome tolerance %.3g at percentile %s", tol, percentile)
    return tol


def calibrated_sat_tol(
    weights: Sequence[SparseWeightMatrix],
    dataset: Dataset,
    layout: ClusterLayout,
    percentile: float = RecallConst.SAT_PERCENTILE,
) -> float | None:
    """Calibrated tolerance, or None when it does not exceed every cluster's relative default.

    Exact constraints leave rounding-level syndromes on clean patterns; a
    tolerance calibrated from those would mark clean clusters unsatisfied.
    """
    calibrated = calibrate_sat_tol(weights, dataset, layout, percentile)
    floor = max((default_sat_tol(W) for W in weights), default=0.0)
    if calibrated <= floor:
        _logger.info("Clean syndromes stay within the relative tolerance %.3g; keeping it", floor)
        return None
    return calibrated
