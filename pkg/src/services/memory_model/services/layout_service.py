import logging
import math

import numpy as np

from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.services.exceptions import InfeasibleLayoutError

_logger = logging.getLogger(__name__)

_ROOM_FLOOR = 1e-9


def _validate(n: int, L: int, target_membership: float, size_spread: float) -> None:
    if L < 1 or n < L:
        msg = f"need n >= L >= 1, got n={n}, L={L}"
        raise InfeasibleLayoutError(msg)
    if target_membership < 1:
        msg = f"target membership must be at least 1, got {target_membership}"
        raise InfeasibleLayoutError(msg)
    if target_membership > L:
        msg = f"target membership {target_membership} exceeds the number of clusters {L}"
        raise InfeasibleLayoutError(msg)
    if not 0 <= size_spread < 1:
        msg = f"size spread must lie in [0, 1), got {size_spread}"
        raise InfeasibleLayoutError(msg)


def random_cluster_layout(
    n: int,
    L: int,
    target_membership: float,
    size_spread: float,
    seed: int,
) -> ClusterLayout:
    """Sample an overlapping layout covering all n neurons.

    Each neuron joins floor(t) or ceil(t) clusters (mean t), chosen without
    replacement with probability proportional to the remaining room of each
    cluster. Cluster capacities are drawn within +/- ``size_spread`` (relative)
    of n*t/L. Empty clusters take a neuron from the largest cluster afterwards,
    then neurons move from the largest to the smallest cluster until every size
    lies in [floor(s (1 - size_spread)), ceil(s (1 + size_spread))], s being the
    mean cluster size. Moves keep every neuron's membership count.
    """
    _validate(n, L, target_membership, size_spread)
    rng = np.random.default_rng(seed)

    base = int(np.floor(target_membership))
    degrees = base + (rng.random(n) < target_membership - base).astype(np.int64)
    degrees = np.clip(degrees, 1, L)

    mean_size = n * target_membership / L
    capacity = mean_size * (1.0 + rng.uniform(-size_spread, size_spread, size=L))
    capacity *= degrees.sum() / capacity.sum()

    members: list[set[int]] = [set() for _ in range(L)]
    fill = np.zeros(L)
    for neuron in rng.permutation(n):
        room = np.maximum(capacity - fill, 0.0) + _ROOM_FLOOR
        chosen = rng.choice(L, size=int(degrees[neuron]), replace=False, p=room / room.sum())
        for cluster_id in chosen:
            members[cluster_id].add(int(neuron))
            fill[cluster_id] += 1

    _repair(members, n, rng)
    _balance(members, size_spread, rng)
    layout = ClusterLayout.from_clusters(n, [sorted(cluster) for cluster in members])
    _logger.debug(
        "Layout n=%s L=%s: mean membership %.3f, mean cluster size %.2f",
        n,
        L,
        layout.membership_counts().mean(),
        layout.cluster_sizes().mean(),
    )
    return layout


def _repair(members: list[set[int]], n: int, rng: np.random.Generator) -> None:
    covered = set().union(*members)
    for neuron in range(n):
        if neuron not in covered:
            smallest = min(range(len(members)), key=lambda c: (len(members[c]), c))
            members[smallest].add(neuron)
    for cluster_id, cluster in enumerate(members):
        if cluster:
            continue
        largest = max(range(len(members)), key=lambda c: (len(members[c]), -c))
        donor = members[largest]
        neuron = int(rng.choice(sorted(donor)))
        shared = sum(neuron in other for other in members) > 1
        if len(donor) > 1 and shared:
            donor.remove(neuron)
        cluster.add(neuron)
        _logger.debug("Cluster %s was empty; assigned neuron %s", cluster_id, neuron)


def _balance(members: list[set[int]], size_spread: float, rng: np.random.Generator) -> None:
    mean_size = sum(len(cluster) for cluster in members) / len(members)
    low = max(1, math.floor(mean_size * (1.0 - size_spread)))
    high = math.ceil(mean_size * (1.0 + size_spread))
    moves = 0
    while True:
        sizes = [len(cluster) for cluster in members]
        smallest, largest = int(np.argmin(sizes)), int(np.argmax(sizes))
        within = sizes[smallest] >= low and sizes[largest] <= high
        if within or sizes[largest] - sizes[smallest] <= 1:
            break
        neuron = int(rng.choice(sorted(members[largest] - members[smallest])))
        members[largest].remove(neuron)
        members[smallest].add(neuron)
        moves += 1
    if moves:
        _logger.debug("Moved %s memberships to keep cluster sizes in [%s, %s]", moves, low, high)
