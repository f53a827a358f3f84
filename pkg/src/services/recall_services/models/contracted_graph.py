from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from src.services.memory_model.models.cluster_layout import ClusterLayout


@dataclass(frozen=True)
class ContractedGraph:
    """Pattern neurons against one super constraint node per cluster.

    ``super_nodes[l]`` lists the neurons of cluster l and ``neuron_edges[i]``
    the super nodes neuron i is attached to.
    """

    n: int
    super_nodes: tuple[tuple[int, ...], ...]
    neuron_edges: tuple[tuple[int, ...], ...]
    _index_arrays: tuple[NDArray[np.int64], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        arrays = tuple(np.asarray(node, dtype=np.int64) for node in self.super_nodes)
        object.__setattr__(self, "_index_arrays", arrays)

    @property
    def size(self) -> int:
        return len(self.super_nodes)

    def indices(self, cluster_id: int) -> NDArray[np.int64]:
        return self._index_arrays[cluster_id]

    def edge_count(self) -> int:
        return sum(len(node) for node in self.super_nodes)

    def to_layout(self) -> ClusterLayout:
        return ClusterLayout(self.n, self.super_nodes)
