import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.noise_spec import NoiseSpec
from src.services.memory_model.services.exceptions import InvalidNoiseError

_logger = logging.getLogger(__name__)


def extract_subpattern(x: ArrayLike, layout: ClusterLayout, cluster_id: int) -> NDArray[np.int64]:
    """Entries of ``x`` on cluster ``cluster_id``'s indices, in index order."""
    pattern = np.asarray(x)
    if pattern.shape != (layout.n,):
        msg = f"pattern length {pattern.shape} does not match layout n={layout.n}"
        raise InvalidNoiseError(msg)
    return pattern[layout.indices(cluster_id)]


def apply_noise(x: ArrayLike, spec: NoiseSpec, Q: int) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    """Corrupt each entry with probability p_e by a nonzero value in [-q, q], q = ``spec.magnitude``.

    The sign is -1 or +1 with probability p_e/2 each; for q > 1 the size is
    then uniform on 1..q.

    Returns the clamped noisy pattern and the noise drawn before clamping.
    """
    pattern = np.asarray(x, dtype=np.int64)
    if pattern.size and (pattern.min() < 0 or pattern.max() > Q - 1):
        msg = f"pattern entries must lie in [0, {Q - 1}]"
        raise InvalidNoiseError(msg)
    rng = np.random.default_rng(spec.rng_seed)
    draws = rng.random(pattern.shape)
    half = spec.p_e / 2.0
    noise = np.zeros(pattern.shape, dtype=np.int64)
    noise[draws < half] = -1
    noise[(draws >= half) & (draws < spec.p_e)] = 1
    if spec.magnitude > 1:
        noise *= rng.integers(1, spec.magnitude + 1, size=pattern.shape)
    noisy = np.clip(pattern + noise, 0, Q - 1)
    return noisy, noise
