"""Command-line surface for constraint learning."""

import argparse
import logging

from pydantic import ValidationError

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import CsvConst, FileConst, LearningConst
from src.enums.enum import EtaPolicyEnum
from src.services.learning_services.models.learning_config import LearningConfig
from src.services.learning_services.models.learning_results import ClusterLearningResult
from src.services.learning_services.services.learning_service import learn_network
from src.services.memory_model.services.file_formats import read_dataset, read_layout, write_weights
from src.utils.command_helper import failed_result, require_file, start_run, success_result
from src.utils.file_helper import write_csv

_logger = logging.getLogger(__name__)

COMMAND = "learn"


def build_learning_config(args: argparse.Namespace, settings: ExperimentSettings) -> LearningConfig:
    if args.image_mode:
        return LearningConfig.image_mode(seed=settings.seed, workers=settings.workers)
    return LearningConfig(
        alpha0=args.alpha0,
        eta_policy=EtaPolicyEnum(args.eta_policy),
        eta=args.eta,
        kappa=args.kappa,
        theta0=args.theta0,
        sigma=args.sigma,
        use_exact_gradient=args.exact_gradient,
        normalize_each_step=args.normalize_each_step,
        epsilon_stop=args.epsilon_stop,
        max_epochs=args.max_epochs,
        zero_epsilon=args.zero_epsilon,
        max_retries=args.max_retries,
        accept_unconverged=args.accept_unconverged,
        seed=settings.seed,
        workers=settings.workers,
    )


def trace_rows(results: list[ClusterLearningResult]) -> list[dict]:
    return [
        {"cluster": cluster_id, "constraint": row, "epoch": epoch, "cost": value}
        for cluster_id, result in enumerate(results)
        for row, constraint in enumerate(result.constraints)
        for epoch, value in enumerate(constraint.trace, start=1)
    ]


class LearningController:
    """Controller for the ``learn`` command."""

    def learn(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            dataset = read_dataset(require_file(args.dataset))
            layout = read_layout(require_file(args.layout))
            config = build_learning_config(args, settings)
            output_dir = start_run(COMMAND, args, settings)
            results = learn_network(dataset, layout, config, args.constraints, args.max_constraints)
            weights_path = write_weights(output_dir / FileConst.WEIGHTS, [result.weights for result in results])
            trace_path = write_csv(output_dir / FileConst.LEARN_TRACE, trace_rows(results), CsvConst.LEARN_TRACE)
        except (ValidationError, MemoryToolkitError, OSError) as e:
            return failed_result(COMMAND, e)
        return success_result(
            weights=weights_path,
            trace=trace_path,
            constraints=sum(result.weights.rows for result in results),
            stored_weights=sum(result.weights.nnz for result in results),
        )


learning_controller = LearningController()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(COMMAND, help="Learn sparse constraints for every cluster")
    parser.add_argument("--dataset", required=True, help="Dataset file")
    parser.add_argument("--layout", required=True, help="Layout file")
    parser.add_argument("--constraints", type=int, default=None, help="Constraints per cluster (default: null space)")
    parser.add_argument("--max-constraints", type=int, default=None, help="Cap on constraints per cluster")
    parser.add_argument("--alpha0", type=float, default=None, help="Initial step (default: 1/max||x||^2)")
    parser.add_argument("--eta-policy", choices=[e.value for e in EtaPolicyEnum], default=EtaPolicyEnum.COUPLED.value)
    parser.add_argument("--eta", type=float, default=0.0, help="Sparsity weight for the fixed policy")
    parser.add_argument("--kappa", type=float, default=LearningConst.KAPPA, help="alpha_t * eta_t when coupled")
    parser.add_argument("--theta0", type=float, default=LearningConst.THETA0)
    parser.add_argument("--sigma", type=float, default=LearningConst.SIGMA)
    parser.add_argument("--exact-gradient", action="store_true", help="Use the tanh penalty gradient")
    parser.add_argument("--normalize-each-step", action="store_true")
    parser.add_argument("--epsilon-stop", type=float, default=LearningConst.EPSILON_STOP)
    parser.add_argument("--max-epochs", type=int, default=LearningConst.MAX_EPOCHS)
    parser.add_argument("--zero-epsilon", type=float, default=None, help="Absolute sparsification cutoff")
    parser.add_argument("--max-retries", type=int, default=LearningConst.MAX_RETRIES)
    parser.add_argument("--accept-unconverged", action="store_true", help="Keep constraints that hit --max-epochs")
    parser.add_argument("--image-mode", action="store_true", help="Binary image defaults: eta=1, theta0=0.01")
    parser.set_defaults(handler=learning_controller.learn)
