from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.services.memory_model.services.exceptions import MemoryModelError

COEFFICIENT_TOL = 1e-9


def check_coefficients(name: str, coefficients: NDArray[np.float64]) -> None:
    """Coefficient vectors must be nonnegative and sum to one."""
    if coefficients.size == 0 or np.any(coefficients < 0) or abs(float(coefficients.sum()) - 1.0) > COEFFICIENT_TOL:
        msg = f"{name} coefficients must be nonnegative and sum to 1, got {coefficients.tolist()}"
        raise MemoryModelError(msg)


@dataclass(frozen=True, eq=False)
class DegreeDistributions:
    """Node- and edge-perspective degree distributions of a clustered network.

    ``node_lambda[l][i]`` is the fraction of pattern neurons in cluster l with
    i constraint neighbours. ``edge_lambda[p]`` / ``edge_rho[p]`` are the
    coefficients of z**p in the edge-perspective polynomials of the contracted
    graph, i.e. the fraction of edges attached to degree p+1 nodes.
    """

    node_lambda: tuple[NDArray[np.float64], ...]
    mean_degree: tuple[float, ...]
    edge_lambda: NDArray[np.float64]
    edge_rho: NDArray[np.float64]

    def __post_init__(self) -> None:
        for cluster_id, coefficients in enumerate(self.node_lambda):
            check_coefficients(f"node_lambda[{cluster_id}]", coefficients)
        check_coefficients("edge_lambda", self.edge_lambda)
        check_coefficients("edge_rho", self.edge_rho)
