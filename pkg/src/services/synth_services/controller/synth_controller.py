"""Command-line surface for synthetic dataset generation."""

import argparse
import logging

import numpy as np
from pydantic import ValidationError

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import FileConst
from src.services.memory_model.services.file_formats import write_dataset
from src.services.synth_services.models.generator_spec import GeneratorSpec
from src.services.synth_services.services.generator_service import generate_dataset, verify_rank
from src.utils.command_helper import failed_result, start_run, success_result
from src.utils.file_helper import write_key_values

_logger = logging.getLogger(__name__)

COMMAND = "gen-data"


class SynthController:
    """Controller for the ``gen-data`` command."""

    def gen_data(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            spec = GeneratorSpec(
                k=args.k,
                n=args.n,
                gamma=args.gamma,
                upsilon=args.upsilon,
                Q=args.alphabet_size,
                seed=settings.seed,
                allow_reject=args.allow_reject,
            )
            G, report = generate_dataset(spec, args.limit, settings.max_patterns, settings.workers)
            output_dir = start_run(COMMAND, args, settings)
            rank = verify_rank(report.dataset)
            dataset_path = write_dataset(output_dir / FileConst.DATASET, report.dataset)
            meta_path = write_key_values(
                output_dir / FileConst.DATASET_META,
                {
                    **spec.model_dump(),
                    "limit": args.limit,
                    "patterns": report.dataset.count,
                    "examined": report.examined,
                    "rejected": report.rejected,
                    "rank": rank,
                    "max_column_degree": int(np.count_nonzero(G, axis=0).max()),
                    "column_budget": spec.column_budget,
                },
            )
        except (ValidationError, MemoryToolkitError, OSError) as e:
            return failed_result(COMMAND, e)
        _logger.info("Wrote %s patterns of rank %s", report.dataset.count, rank)
        return success_result(
            dataset=dataset_path,
            meta=meta_path,
            patterns=report.dataset.count,
            rank=rank,
            rejected=report.rejected,
        )


synth_controller = SynthController()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(COMMAND, help="Generate subspace patterns x = G^T u")
    parser.add_argument("--k", type=int, required=True, help="Subspace dimension")
    parser.add_argument("--n", type=int, required=True, help="Pattern length")
    parser.add_argument("--gamma", type=int, default=2, help="Generator alphabet size")
    parser.add_argument("--upsilon", type=int, default=2, help="Coefficient alphabet size")
    parser.add_argument("--alphabet-size", "-Q", type=int, required=True, help="Pattern alphabet size Q")
    parser.add_argument("--limit", type=int, default=None, help="Keep only the first patterns in u order")
    parser.add_argument(
        "--allow-reject",
        action="store_true",
        help="Drop candidates with entries above Q-1 instead of bounding column degrees",
    )
    parser.set_defaults(handler=synth_controller.gen_data)
