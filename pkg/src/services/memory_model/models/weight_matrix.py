from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse

from src.constants.app_constants import LearningConst
from src.services.memory_model.services.exceptions import InvalidWeightsError


@dataclass(frozen=True, eq=False)
class SparseWeightMatrix:
    """Constraint matrix W of one cluster: m rows (constraint neurons) by n_l columns.

    Entries with magnitude at most ``zero_epsilon`` are never stored; a stored
    entry is an edge of the cluster's bipartite graph.
    """

    cluster_id: int
    rows: int
    cols: int
    matrix: sparse.csr_array
    zero_epsilon: float

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            msg = f"negative shape ({self.rows}, {self.cols})"
            raise InvalidWeightsError(msg)
        if self.matrix.shape != (self.rows, self.cols):
            msg = f"matrix shape {self.matrix.shape} does not match ({self.rows}, {self.cols})"
            raise InvalidWeightsError(msg)
        if self.matrix.nnz and np.min(np.abs(self.matrix.data)) <= self.zero_epsilon:
            msg = f"cluster {self.cluster_id} stores an entry with |value| <= {self.zero_epsilon}"
            raise InvalidWeightsError(msg)

    @classmethod
    def from_entries(
        cls,
        cluster_id: int,
        rows: int,
        cols: int,
        entries: Iterable[tuple[int, int, float]],
        zero_epsilon: float = 0.0,
    ) -> "SparseWeightMatrix":
        triplets = list(entries)
        seen: set[tuple[int, int]] = set()
        for row, col, value in triplets:
            if not (0 <= row < rows and 0 <= col < cols):
                msg = f"entry ({row}, {col}) outside ({rows}, {cols})"
                raise InvalidWeightsError(msg)
            if (row, col) in seen:
                msg = f"duplicate entry ({row}, {col}) in cluster {cluster_id}"
                raise InvalidWeightsError(msg)
            if abs(value) <= zero_epsilon:
                msg = f"entry ({row}, {col}) = {value} is not above zero_epsilon {zero_epsilon}"
                raise InvalidWeightsError(msg)
            seen.add((row, col))
        row_index = np.array([t[0] for t in triplets], dtype=np.int64)
        col_index = np.array([t[1] for t in triplets], dtype=np.int64)
        values = np.array([t[2] for t in triplets], dtype=float)
        matrix = sparse.csr_array((values, (row_index, col_index)), shape=(rows, cols))
        return cls(cluster_id, rows, cols, matrix, float(zero_epsilon))

    @classmethod
    def from_dense(
        cls,
        cluster_id: int,
        dense: ArrayLike,
        zero_epsilon: float | None = None,
        relative_zero: float = LearningConst.RELATIVE_ZERO,
    ) -> "SparseWeightMatrix":
        """Sparsify a dense matrix.

        Without an explicit ``zero_epsilon`` each row drops entries at or below
        ``relative_zero * max|row|``; the smallest cutoff applied is recorded.
        """
        values = np.atleast_2d(np.asarray(dense, dtype=float))
        if values.size == 0:
            return cls.empty(cluster_id, values.shape[1] if values.ndim == 2 else 0)  # noqa: PLR2004
        if zero_epsilon is None:
            cutoffs = relative_zero * np.max(np.abs(values), axis=1)
            kept = np.abs(values) > cutoffs[:, None]
            positive = cutoffs[cutoffs > 0]
            recorded = float(positive.min()) if positive.size else 0.0
        else:
            kept = np.abs(values) > zero_epsilon
            recorded = float(zero_epsilon)
        row_index, col_index = np.nonzero(kept)
        matrix = sparse.csr_array(
            (values[row_index, col_index], (row_index, col_index)),
            shape=values.shape,
        )
        return cls(cluster_id, values.shape[0], values.shape[1], matrix, recorded)

    @classmethod
    def empty(cls, cluster_id: int, cols: int) -> "SparseWeightMatrix":
        return cls(cluster_id, 0, cols, sparse.csr_array((0, cols), dtype=float), 0.0)

    @cached_property
    def dense(self) -> NDArray[np.float64]:
        values = self.matrix.toarray() if self.rows else np.zeros((0, self.cols))
        values.setflags(write=False)
        return values

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    def column_degrees(self) -> NDArray[np.int64]:
        return np.count_nonzero(self.dense, axis=0).astype(np.int64)

    def row_degrees(self) -> NDArray[np.int64]:
        return np.count_nonzero(self.dense, axis=1).astype(np.int64)

    def entries(self) -> list[tuple[int, int, float]]:
        """Stored (row, col, value) triplets in row-major order."""
        coo = self.matrix.tocoo()
        order = np.lexsort((coo.col, coo.row))
        return [(int(coo.row[i]), int(coo.col[i]), float(coo.data[i])) for i in order]
