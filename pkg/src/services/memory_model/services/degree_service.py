from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.degree_distributions import DegreeDistributions
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.exceptions import MemoryModelError


def node_degree_distribution(W: SparseWeightMatrix) -> tuple[NDArray[np.float64], float]:
    """Lambda_i = fraction of the cluster's pattern neurons with i stored entries, and their mean degree."""
    degrees = W.column_degrees()
    if degrees.size == 0:
        return np.array([1.0]), 0.0
    counts = np.bincount(degrees, minlength=W.rows + 1).astype(float)
    return counts / degrees.size, float(degrees.mean())


def edge_degree_distributions(layout: ClusterLayout) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Edge-perspective (lambda~, rho~) of the contracted graph, indexed by power of z."""
    neuron_degrees = layout.membership_counts()
    cluster_sizes = layout.cluster_sizes()
    edges = float(neuron_degrees.sum())
    edge_lambda = np.bincount(neuron_degrees - 1, weights=neuron_degrees.astype(float)) / edges
    edge_rho = np.bincount(cluster_sizes - 1, weights=cluster_sizes.astype(float)) / edges
    return edge_lambda, edge_rho


def degree_distributions(weights: Sequence[SparseWeightMatrix], layout: ClusterLayout) -> DegreeDistributions:
    if len(weights) != layout.size:
        msg = f"expected {layout.size} weight matrices, got {len(weights)}"
        raise MemoryModelError(msg)
    node = [node_degree_distribution(W) for W in weights]
    edge_lambda, edge_rho = edge_degree_distributions(layout)
    return DegreeDistributions(
        node_lambda=tuple(coefficients for coefficients, _ in node),
        mean_degree=tuple(mean for _, mean in node),
        edge_lambda=edge_lambda,
        edge_rho=edge_rho,
    )
