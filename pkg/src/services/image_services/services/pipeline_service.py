"""Learn a clustered memory from images and measure how well it denoises them."""

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.services.image_services.models.image_pattern import ImagePattern
from src.services.image_services.models.pipeline_config import ImagePipelineConfig
from src.services.image_services.services.exceptions import InvalidImageError, ZeroReferenceError
from src.services.image_services.services.projection_service import Projection, project_to_learned, snr
from src.services.image_services.services.quantization_service import (
    binary_collapse,
    dequantize,
    expand_dataset,
    quantize,
)
from src.services.learning_services.models.learning_config import LearningConfig
from src.services.learning_services.services.learning_service import learn_network
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.noise_spec import NoiseSpec
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.layout_service import random_cluster_layout
from src.services.memory_model.services.noise_service import apply_noise
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.services.peeling_service import calibrated_sat_tol, peel
from src.utils.random_helper import derive_seed

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ImageOutcome:
    """Per-image result; ``learned``, ``noisy`` and ``denoised`` are dequantized images."""

    name: str
    snr_in: float
    snr_out: float
    residual_clusters: int
    learned: ImagePattern
    noisy: ImagePattern
    denoised: ImagePattern

    def to_row(self) -> dict:
        return {
            "image": self.name,
            "snr_in": self.snr_in,
            "snr_out": self.snr_out,
            "residual_clusters": self.residual_clusters,
        }


@dataclass(frozen=True, eq=False)
class ImagePipelineResult:
    layout: ClusterLayout
    weights: tuple[SparseWeightMatrix, ...]
    recall_config: RecallConfig
    projections: tuple[Projection, ...]
    outcomes: tuple[ImageOutcome, ...]


def _safe_snr(reference: np.ndarray, test: np.ndarray, name: str) -> float:
    try:
        return snr(reference, test)
    except ZeroReferenceError:
        _logger.warning("Image %s has an all-zero learned pattern; SNR left undefined", name)
        return math.nan


def _check_images(images: Sequence[ImagePattern]) -> None:
    if not images:
        msg = "the image pipeline needs at least one image"
        raise InvalidImageError(msg)
    shapes = {(image.width, image.height) for image in images}
    if len(shapes) != 1:
        msg = f"all images must share one size, got {sorted(shapes)}"
        raise InvalidImageError(msg)


def run_image_pipeline(images: Sequence[ImagePattern], config: ImagePipelineConfig) -> ImagePipelineResult:
    """Quantize, expand to bits, learn, project to the learned set, corrupt and peel.

    SNRs compare quantized levels of the learned pattern with its noisy and
    denoised versions.
    """
    _check_images(images)
    width, height = images[0].width, images[0].height
    levels = Dataset(np.vstack([quantize(image, config.levels) for image in images]), config.levels)
    binary = expand_dataset(levels)
    layout = random_cluster_layout(binary.n, config.clusters, config.membership, config.size_spread, config.seed)
    learned = learn_network(
        binary,
        layout,
        LearningConfig.image_mode(seed=config.seed, workers=config.workers),
        max_constraints=config.max_constraints,
    )
    weights = tuple(result.weights for result in learned)
    recall_config = RecallConfig.image_mode(calibrated_sat_tol(weights, binary, layout, config.sat_percentile))
    _logger.info(
        "Learned %s constraints over %s binary neurons; syndrome tolerance %s",
        sum(W.rows for W in weights),
        binary.n,
        "relative" if recall_config.sat_tol is None else f"{recall_config.sat_tol:.3g}",
    )

    def process(index: int) -> tuple[Projection, ImageOutcome]:
        name = images[index].name or f"image_{index:03d}"
        projection = project_to_learned(binary.patterns[index], weights, layout, recall_config, Q=2)
        spec = NoiseSpec(p_e=config.p_e, rng_seed=derive_seed(config.seed, index))
        noisy, _ = apply_noise(projection.pattern, spec, 2)
        denoised = peel(weights, layout, noisy, recall_config, 2).pattern
        reference_levels = binary_collapse(projection.pattern, config.levels)
        noisy_levels = binary_collapse(noisy, config.levels)
        denoised_levels = binary_collapse(denoised, config.levels)
        outcome = ImageOutcome(
            name=name,
            snr_in=_safe_snr(reference_levels, noisy_levels, name),
            snr_out=_safe_snr(reference_levels, denoised_levels, name),
            residual_clusters=len(projection.residual_clusters),
            learned=dequantize(reference_levels, config.levels, width, height, name),
            noisy=dequantize(noisy_levels, config.levels, width, height, name),
            denoised=dequantize(denoised_levels, config.levels, width, height, name),
        )
        return projection, outcome

    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        processed = list(executor.map(process, range(len(images))))
    return ImagePipelineResult(
        layout=layout,
        weights=weights,
        recall_config=recall_config,
        projections=tuple(projection for projection, _ in processed),
        outcomes=tuple(outcome for _, outcome in processed),
    )
