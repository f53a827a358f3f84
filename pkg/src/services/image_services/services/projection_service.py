import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.constants.app_constants import ImageConst
from src.services.image_services.models.image_pattern import ImagePattern
from src.services.image_services.services.exceptions import MalformedPatternError, ZeroReferenceError
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.services.peeling_service import build_contracted, peel, unsatisfied_clusters

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Projection:
    """Learned pattern x' and the clusters it still leaves unsatisfied."""

    pattern: NDArray[np.int64]
    residual_clusters: tuple[int, ...]
    passes: int

    @property
    def satisfied(self) -> bool:
        return not self.residual_clusters


def project_to_learned(
    x: ArrayLike,
    weights: Sequence[SparseWeightMatrix],
    layout: ClusterLayout,
    config: RecallConfig,
    Q: int = 2,
) -> Projection:
    """Treat the deviation from the learned set as noise and peel it away.

    Peeling is repeated until it stops changing the pattern, so projecting the
    result again returns it unchanged.
    """
    graph = build_contracted(layout)
    state = np.array(x, dtype=np.int64, copy=True)
    passes = 0
    for _ in range(config.peel_rounds_max):
        result = peel(weights, graph, state, config, Q)
        passes += 1
        if np.array_equal(result.pattern, state):
            break
        state = result.pattern
    residual = tuple(unsatisfied_clusters(weights, graph, state, config))
    return Projection(pattern=state, residual_clusters=residual, passes=passes)


def snr(reference: ArrayLike, test: ArrayLike) -> float:
    """10 log10(||reference||^2 / ||test - reference||^2) in dB; inf when they match."""
    ref = np.asarray(reference, dtype=float)
    other = np.asarray(test, dtype=float)
    if ref.shape != other.shape:
        msg = f"reference shape {ref.shape} does not match test shape {other.shape}"
        raise MalformedPatternError(msg)
    signal = float(ref @ ref)
    if signal == 0.0:
        msg = "SNR is undefined for an all-zero reference"
        raise ZeroReferenceError(msg)
    noise = float((other - ref) @ (other - ref))
    if noise == 0.0:
        return math.inf
    return 10.0 * math.log10(signal / noise)


def synthetic_images(
    count: int,
    width: int = ImageConst.SIZE,
    height: int = ImageConst.SIZE,
    seed: int = 0,
) -> list[ImagePattern]:
    """Smooth test images: a random linear gradient plus one Gaussian blob each."""
    rng = np.random.default_rng(seed)
    rows, cols = np.mgrid[0:height, 0:width].astype(float)
    rows /= max(height - 1, 1)
    cols /= max(width - 1, 1)
    images = []
    for index in range(count):
        slope_r, slope_c = rng.uniform(-80, 80, size=2)
        base = rng.uniform(60, 190)
        centre_r, centre_c = rng.uniform(0.2, 0.8, size=2)
        spread = rng.uniform(0.1, 0.3)
        amplitude = rng.uniform(-70, 70)
        blob = amplitude * np.exp(-((rows - centre_r) ** 2 + (cols - centre_c) ** 2) / (2 * spread**2))
        grid = base + slope_r * (rows - 0.5) + slope_c * (cols - 0.5) + blob
        pixels = np.clip(np.rint(grid), 0, ImageConst.PIXEL_RANGE - 1).astype(np.int64)
        images.append(ImagePattern.from_grid(pixels, name=f"synthetic_{index:03d}"))
    return images
