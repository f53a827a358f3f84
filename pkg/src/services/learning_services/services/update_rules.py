"""Elementary pieces of the constraint learning rule."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.services.learning_services.services.exceptions import (
    DimensionMismatchError,
    EmptyDatasetError,
    ZeroNormError,
)
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset


def project(x_sub: ArrayLike, w: ArrayLike) -> float:
    """y = <x, w>."""
    x = np.asarray(x_sub, dtype=float)
    weights = np.asarray(w, dtype=float)
    if x.shape != weights.shape:
        msg = f"pattern shape {x.shape} does not match weights shape {weights.shape}"
        raise DimensionMismatchError(msg)
    return float(x @ weights)


def penalty(w: ArrayLike, sigma: float) -> float:
    """Smooth l0 surrogate: sum_i tanh(sigma * w_i^2)."""
    weights = np.asarray(w, dtype=float)
    return float(np.tanh(sigma * weights**2).sum())


def penalty_gradient_exact(w: ArrayLike, sigma: float) -> NDArray[np.float64]:
    """Gradient of ``penalty``: 2 sigma w_i (1 - tanh^2(sigma w_i^2)).

    Used in place of the soft threshold when ``use_exact_gradient`` is set; for
    |w_i| well above 1/sqrt(sigma) it vanishes, like the threshold does.
    """
    weights = np.asarray(w, dtype=float)
    return 2.0 * sigma * weights * (1.0 - np.tanh(sigma * weights**2) ** 2)


def soft_threshold(z: ArrayLike, theta: float) -> NDArray[np.float64]:
    """Keep entries with |z_i| <= theta, zero the rest."""
    values = np.asarray(z, dtype=float)
    return np.where(np.abs(values) <= theta, values, 0.0)


def learn_step(
    w: ArrayLike,
    x_sub: ArrayLike,
    alpha_t: float,
    eta: float,
    theta_t: float,
    gradient: NDArray[np.float64] | None = None,
) -> NDArray[np.float64]:
    """w - alpha_t * (y (x - y w / ||w||^2) + eta * Gamma(w, theta_t)).

    ``gradient`` replaces the soft threshold Gamma when given.
    """
    weights = np.asarray(w, dtype=float)
    x = np.asarray(x_sub, dtype=float)
    squared_norm = float(weights @ weights)
    if squared_norm == 0.0:
        msg = "learning step needs a nonzero weight vector"
        raise ZeroNormError(msg)
    y = project(x, weights)
    shrink = soft_threshold(weights, theta_t) if gradient is None else gradient
    return weights - alpha_t * (y * (x - y * weights / squared_norm) + eta * shrink)


def cluster_patterns(dataset: Dataset, layout: ClusterLayout, cluster_id: int) -> NDArray[np.float64]:
    """C x n_l matrix of sub-patterns of cluster ``cluster_id``."""
    return dataset.patterns[:, layout.indices(cluster_id)].astype(float)


def cost(w: ArrayLike, dataset: Dataset, layout: ClusterLayout, cluster_id: int) -> float:
    """Mean squared projection over every sub-pattern of the cluster."""
    if dataset.count == 0:
        msg = "cost of an empty dataset is undefined"
        raise EmptyDatasetError(msg)
    return sub_pattern_cost(w, cluster_patterns(dataset, layout, cluster_id))


def sub_pattern_cost(w: ArrayLike, patterns: NDArray[np.float64]) -> float:
    weights = np.asarray(w, dtype=float)
    if patterns.shape[1] != weights.shape[0]:
        msg = f"sub-patterns of length {patterns.shape[1]} do not match weights of length {weights.shape[0]}"
        raise DimensionMismatchError(msg)
    return float(np.mean((patterns @ weights) ** 2))
