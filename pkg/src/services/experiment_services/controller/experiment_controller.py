"""Command-line surface for recall sweeps and degree reports."""

import argparse
import logging

from pydantic import ValidationError

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import CsvConst, FileConst
from src.services.analysis_services.controller.analysis_controller import coefficient_list, p_e_grid
from src.services.experiment_services.models.experiment_config import ExperimentConfig
from src.services.experiment_services.services.degree_report_service import degree_report
from src.services.experiment_services.services.sweep_service import sweep_per
from src.services.memory_model.services.file_formats import read_dataset, read_layout, read_weights
from src.services.recall_services.controller.recall_controller import add_recall_arguments, build_recall_config
from src.utils.command_helper import failed_result, require_file, start_run, success_result
from src.utils.file_helper import write_csv

_logger = logging.getLogger(__name__)

SWEEP_COMMAND = "sweep-per"
DEGREE_COMMAND = "degree-report"


def sweep_points(args: argparse.Namespace) -> tuple[float, ...]:
    """Noise probabilities from --p-e followed by --p-e-grid."""
    values = list(args.p_e or ())
    if args.p_e_grid is not None:
        values.extend(float(value) for value in args.p_e_grid)
    return tuple(values)


class ExperimentController:
    """Controller for ``sweep-per`` and ``degree-report``."""

    def sweep(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            config = ExperimentConfig(
                p_e_values=sweep_points(args),
                trials=args.trials,
                seed=settings.seed,
                workers=settings.workers,
            )
            dataset = read_dataset(require_file(args.dataset))
            layout = read_layout(require_file(args.layout))
            weights = read_weights(require_file(args.weights))
            recall_config = build_recall_config(args, weights, layout, dataset)
            output_dir = start_run(SWEEP_COMMAND, args, settings)
            points = sweep_per(dataset, layout, weights, recall_config, config)
            path = write_csv(output_dir / FileConst.SWEEP_PER, [point.to_row() for point in points], CsvConst.SWEEP_PER)
        except (ValidationError, MemoryToolkitError, OSError) as e:
            return failed_result(SWEEP_COMMAND, e)
        return success_result(
            sweep=path,
            points=len(points),
            per={f"{point.p_e:.9g}": point.per for point in points},
        )

    def degrees(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            weights = read_weights(require_file(args.weights))
            output_dir = start_run(DEGREE_COMMAND, args, settings)
            rows = degree_report(weights)
            path = write_csv(output_dir / FileConst.DEGREE_REPORT, rows, CsvConst.DEGREE_REPORT)
        except (MemoryToolkitError, OSError) as e:
            return failed_result(DEGREE_COMMAND, e)
        _logger.info("Wrote %s histogram bins for %s clusters", len(rows), len(weights))
        return success_result(report=path, clusters=len(weights), bins=len(rows))


experiment_controller = ExperimentController()


def register(subparsers: argparse._SubParsersAction) -> None:
    sweep = subparsers.add_parser(SWEEP_COMMAND, help="Monte Carlo PER/SER of peeling recall")
    sweep.add_argument("--dataset", required=True, help="Training dataset the trials sample from")
    sweep.add_argument("--layout", required=True, help="Layout file")
    sweep.add_argument("--weights", required=True, help="Weights file")
    sweep.add_argument("--p-e", type=coefficient_list, default=None, help="Comma separated noise probabilities")
    sweep.add_argument("--p-e-grid", type=p_e_grid, default=None, help="start,stop,count")
    sweep.add_argument("--trials", type=int, default=1000, help="Trials per noise probability")
    add_recall_arguments(sweep)
    sweep.set_defaults(handler=experiment_controller.sweep)

    degrees = subparsers.add_parser(DEGREE_COMMAND, help="Normalized degree histograms of learned weights")
    degrees.add_argument("--weights", required=True, help="Weights file")
    degrees.set_defaults(handler=experiment_controller.degrees)
