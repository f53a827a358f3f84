"""Command-line surface for cluster layout generation."""

import argparse
import logging

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import FileConst
from src.services.memory_model.services.file_formats import write_layout
from src.services.memory_model.services.layout_service import random_cluster_layout
from src.utils.command_helper import failed_result, start_run, success_result

_logger = logging.getLogger(__name__)

COMMAND = "gen-layout"


class LayoutController:
    """Controller for the ``gen-layout`` command."""

    def gen_layout(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            output_dir = start_run(COMMAND, args, settings)
            layout = random_cluster_layout(
                n=args.n,
                L=args.clusters,
                target_membership=args.membership,
                size_spread=args.size_spread,
                seed=settings.seed,
            )
            path = write_layout(output_dir / FileConst.LAYOUT, layout)
        except (MemoryToolkitError, OSError) as e:
            return failed_result(COMMAND, e)
        _logger.info("Wrote layout with %s clusters to %s", layout.size, path)
        return success_result(
            layout=path,
            clusters=layout.size,
            mean_membership=float(layout.membership_counts().mean()),
            mean_cluster_size=float(layout.cluster_sizes().mean()),
        )


layout_controller = LayoutController()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(COMMAND, help="Sample an overlapping cluster layout")
    parser.add_argument("--n", type=int, required=True, help="Number of pattern neurons")
    parser.add_argument("--clusters", "-L", type=int, required=True, help="Number of clusters L")
    parser.add_argument("--membership", type=float, default=5.0, help="Target clusters per neuron")
    parser.add_argument("--size-spread", type=float, default=0.2, help="Relative spread of cluster sizes")
    parser.set_defaults(handler=layout_controller.gen_layout)
