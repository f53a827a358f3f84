"""Monte Carlo pattern and symbol error rates of peeling recall."""

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from functools import partial

import numpy as np

from src.services.experiment_services.models.experiment_config import ExperimentConfig
from src.services.experiment_services.models.sweep_results import SweepPoint
from src.services.experiment_services.services.exceptions import MissingInputError
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.noise_spec import NoiseSpec
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.noise_service import apply_noise
from src.services.recall_services.models.contracted_graph import ContractedGraph
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.services.peeling_service import build_contracted, peel
from src.utils.random_helper import derive_rng

_logger = logging.getLogger(__name__)


def run_trial(
    dataset: Dataset,
    weights: Sequence[SparseWeightMatrix],
    graph: ContractedGraph,
    recall_config: RecallConfig,
    p_e: float,
    rng: np.random.Generator,
) -> int:
    """Corrupt one uniformly drawn training pattern, peel it and return its wrong entries."""
    index = int(rng.integers(dataset.count))
    original = dataset.patterns[index]
    spec = NoiseSpec(p_e=p_e, rng_seed=int(rng.integers(2**62)))
    noisy, _ = apply_noise(original, spec, dataset.alphabet_size)
    recalled = peel(weights, graph, noisy, recall_config, dataset.alphabet_size).pattern
    return int(np.count_nonzero(recalled != original))


def sweep_per(
    dataset: Dataset,
    layout: ClusterLayout,
    weights: Sequence[SparseWeightMatrix],
    recall_config: RecallConfig,
    config: ExperimentConfig,
) -> list[SweepPoint]:
    """PER and SER at each noise probability.

    A trial fails when the recalled pattern differs from the pattern that was
    corrupted; peeling reaching a satisfied state on another pattern still
    counts as a failure.
    """
    if dataset.count == 0:
        msg = "sweeping needs at least one training pattern"
        raise MissingInputError(msg)
    if layout.n != dataset.n:
        msg = f"layout covers {layout.n} neurons but patterns have {dataset.n}"
        raise MissingInputError(msg)
    graph = build_contracted(layout)
    points = []
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        for p_index, p_e in enumerate(config.p_e_values):
            rngs = [derive_rng(config.seed, p_index, trial) for trial in range(config.trials)]
            run = partial(run_trial, dataset, weights, graph, recall_config, p_e)
            errors = list(executor.map(run, rngs))
            point = SweepPoint(
                p_e=float(p_e),
                trials=config.trials,
                pattern_errors=sum(count > 0 for count in errors),
                symbol_errors=sum(errors),
                n=dataset.n,
            )
            _logger.info("p_e=%.4g: PER=%.4g SER=%.4g over %s trials", p_e, point.per, point.ser, point.trials)
            points.append(point)
    return points
