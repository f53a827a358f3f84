"""Command-line surface for peeling recall."""

import argparse
import logging
from collections.abc import Sequence

from pydantic import ValidationError

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import CsvConst, FileConst, RecallConst
from src.services.memory_model.models.cluster_layout import ClusterLayout
from src.services.memory_model.models.dataset import Dataset
from src.services.memory_model.models.noise_spec import NoiseSpec
from src.services.memory_model.models.weight_matrix import SparseWeightMatrix
from src.services.memory_model.services.file_formats import read_dataset, read_layout, read_weights, write_dataset
from src.services.memory_model.services.noise_service import apply_noise
from src.services.recall_services.models.recall_config import RecallConfig
from src.services.recall_services.models.recall_results import PeelResult
from src.services.recall_services.services.peeling_service import build_contracted, calibrated_sat_tol, peel
from src.utils.command_helper import failed_result, require_file, start_run, success_result
from src.utils.file_helper import write_csv
from src.utils.random_helper import derive_seed

_logger = logging.getLogger(__name__)

COMMAND = "recall"


def add_recall_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--phi", type=float, default=RecallConst.PHI, help="Update threshold on |g|")
    parser.add_argument("--psi", type=float, default=RecallConst.PSI, help="Activation threshold on |h|")
    parser.add_argument("--t-max", type=int, default=RecallConst.T_MAX)
    parser.add_argument("--peel-rounds-max", type=int, default=RecallConst.PEEL_ROUNDS_MAX)
    parser.add_argument("--sat-tol", type=float, default=None, help="Syndrome tolerance (default: calibrated)")
    parser.add_argument(
        "--sat-percentile",
        type=float,
        default=RecallConst.SAT_PERCENTILE_EXACT,
        help="Percentile of clean syndromes used when calibrating the tolerance",
    )


def build_recall_config(
    args: argparse.Namespace,
    weights: Sequence[SparseWeightMatrix],
    layout: ClusterLayout,
    dataset: Dataset | None,
) -> RecallConfig:
    """Recall thresholds from flags; without --sat-tol the tolerance is calibrated on clean patterns."""
    sat_tol = args.sat_tol
    if sat_tol is None and dataset is not None:
        sat_tol = calibrated_sat_tol(weights, dataset, layout, args.sat_percentile)
    return RecallConfig(
        phi=args.phi,
        psi=args.psi,
        t_max=args.t_max,
        peel_rounds_max=args.peel_rounds_max,
        sat_tol=sat_tol,
    )


def corrupt_dataset(dataset: Dataset, p_e: float, seed: int, magnitude: int = 1) -> Dataset:
    """Independent noise per row, seeded by (seed, row index)."""
    specs = [
        NoiseSpec(p_e=p_e, rng_seed=derive_seed(seed, index), magnitude=magnitude) for index in range(dataset.count)
    ]
    rows = [apply_noise(row, spec, dataset.alphabet_size)[0] for row, spec in zip(dataset.patterns, specs, strict=True)]
    return Dataset.from_rows(rows, dataset.alphabet_size) if rows else dataset


def log_rows(results: Sequence[PeelResult]) -> list[dict]:
    return [
        {
            "pattern": index,
            "round": event.round,
            "cluster": event.cluster,
            "attempted": int(event.attempted),
            "succeeded": int(event.succeeded),
            "changed_neurons": ";".join(str(i) for i in event.changed_neurons),
        }
        for index, result in enumerate(results)
        for event in result.events
    ]


class RecallController:
    """Controller for the ``recall`` command."""

    def recall(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            weights = read_weights(require_file(args.weights))
            layout = read_layout(require_file(args.layout))
            noisy = read_dataset(require_file(args.patterns))
            reference = read_dataset(require_file(args.dataset)) if args.dataset else None
            config = build_recall_config(args, weights, layout, reference)
            output_dir = start_run(COMMAND, args, settings)
            if args.p_e > 0:
                noisy = corrupt_dataset(noisy, args.p_e, settings.seed, args.noise_magnitude)
                write_dataset(output_dir / FileConst.NOISY, noisy)
            graph = build_contracted(layout)
            results = [peel(weights, graph, row, config, noisy.alphabet_size) for row in noisy.patterns]
            recalled = (
                Dataset.from_rows([result.pattern for result in results], noisy.alphabet_size) if results else noisy
            )
            recalled_path = write_dataset(output_dir / FileConst.RECALLED, recalled)
            log_path = write_csv(output_dir / FileConst.RECALL_LOG, log_rows(results), CsvConst.RECALL_LOG)
            status_path = write_csv(
                output_dir / FileConst.RECALL_STATUS,
                [
                    {"pattern": i, "success": int(result.success), "rounds": result.rounds}
                    for i, result in enumerate(results)
                ],
                CsvConst.RECALL_STATUS,
            )
        except (ValidationError, MemoryToolkitError, OSError) as e:
            return failed_result(COMMAND, e)
        successes = sum(result.success for result in results)
        _logger.info("Recalled %s patterns, %s fully satisfied", len(results), successes)
        return success_result(
            recalled=recalled_path,
            log=log_path,
            status=status_path,
            patterns=len(results),
            successes=successes,
        )


recall_controller = RecallController()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(COMMAND, help="Denoise patterns by peeling")
    parser.add_argument("--weights", required=True, help="Weights file")
    parser.add_argument("--layout", required=True, help="Layout file")
    parser.add_argument("--patterns", required=True, help="Noisy patterns in the dataset format")
    parser.add_argument("--dataset", default=None, help="Clean training dataset for tolerance calibration")
    parser.add_argument("--p-e", type=float, default=0.0, help="Corrupt the input patterns first")
    parser.add_argument("--noise-magnitude", type=int, default=1, help="Largest absolute value of the corruption")
    add_recall_arguments(parser)
    parser.set_defaults(handler=recall_controller.recall)
