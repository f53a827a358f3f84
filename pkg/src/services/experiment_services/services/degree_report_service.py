from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

from src.enums.enum import DegreeKindEnum
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix


def normalized_histogram(degrees: NDArray[np.int64], size: int) -> list[tuple[float, float]]:
    """(degree / size, fraction of nodes) pairs in increasing degree order."""
    if degrees.size == 0:
        return []
    normalized = degrees / size if size else np.zeros(degrees.size)
    values, counts = np.unique(normalized, return_counts=True)
    return [(float(value), float(count) / degrees.size) for value, count in zip(values, counts, strict=True)]


def degree_report(weights: Sequence[SparseWeightMatrix]) -> list[dict]:
    """Per-cluster histograms of pattern degrees over m and constraint degrees over n_l."""
    rows = []
    for W in weights:
        histograms = {
            DegreeKindEnum.PATTERN: normalized_histogram(W.column_degrees(), W.rows),
            DegreeKindEnum.CONSTRAINT: normalized_histogram(W.row_degrees(), W.cols),
        }
        for kind, histogram in histograms.items():
            rows.extend(
                {"cluster": W.cluster_id, "kind": kind.value, "normalized_degree": degree, "fraction": fraction}
                for degree, fraction in histogram
            )
    return rows
