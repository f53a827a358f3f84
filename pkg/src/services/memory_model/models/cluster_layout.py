from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from src.services.memory_model.services.exceptions import ClusterIndexError, InvalidLayoutError


@dataclass(frozen=True)
class ClusterLayout:
    """L overlapping, sorted index sets over n pattern neurons.

    ``membership[i]`` lists the clusters neuron i belongs to and is always the
    exact inverse of ``clusters``.
    """

    n: int
    clusters: tuple[tuple[int, ...], ...]
    membership: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        clusters = tuple(tuple(int(index) for index in cluster) for cluster in self.clusters)
        if not clusters:
            msg = "a layout needs at least one cluster"
            raise InvalidLayoutError(msg)
        membership: list[list[int]] = [[] for _ in range(self.n)]
        for cluster_id, cluster in enumerate(clusters):
            if not cluster:
                msg = f"cluster {cluster_id} is empty"
                raise InvalidLayoutError(msg)
            if any(b <= a for a, b in zip(cluster, cluster[1:], strict=False)):
                msg = f"cluster {cluster_id} indices must be strictly increasing"
                raise InvalidLayoutError(msg)
            if cluster[0] < 0 or cluster[-1] >= self.n:
                msg = f"cluster {cluster_id} has an index outside [0, {self.n})"
                raise InvalidLayoutError(msg)
            for index in cluster:
                membership[index].append(cluster_id)
        orphans = [index for index, owners in enumerate(membership) if not owners]
        if orphans:
            msg = f"neurons {orphans[:10]} belong to no cluster"
            raise InvalidLayoutError(msg)
        object.__setattr__(self, "clusters", clusters)
        object.__setattr__(self, "membership", tuple(tuple(owners) for owners in membership))

    @classmethod
    def from_clusters(cls, n: int, clusters: Sequence[Sequence[int]]) -> "ClusterLayout":
        return cls(n, tuple(tuple(sorted(int(i) for i in cluster)) for cluster in clusters))

    @property
    def size(self) -> int:
        """Number of clusters L."""
        return len(self.clusters)

    def indices(self, cluster_id: int) -> NDArray[np.int64]:
        if not 0 <= cluster_id < self.size:
            msg = f"cluster id {cluster_id} outside [0, {self.size})"
            raise ClusterIndexError(msg)
        return np.asarray(self.clusters[cluster_id], dtype=np.int64)

    def cluster_sizes(self) -> NDArray[np.int64]:
        return np.array([len(cluster) for cluster in self.clusters], dtype=np.int64)

    def membership_counts(self) -> NDArray[np.int64]:
        return np.array([len(owners) for owners in self.membership], dtype=np.int64)
