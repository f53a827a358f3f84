"""Command-line surface for the image learning and denoising pipeline."""

import argparse
import logging
from pathlib import Path

from pydantic import ValidationError

from src.common.exceptions import MemoryToolkitError
from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import CsvConst, FileConst, ImageConst, RecallConst
from src.services.image_services.models.image_pattern import ImagePattern
from src.services.image_services.models.pipeline_config import ImagePipelineConfig
from src.services.image_services.services.exceptions import InvalidImageError
from src.services.image_services.services.pgm_service import PGM_SUFFIX, read_pgm, write_pgm
from src.services.image_services.services.pipeline_service import ImagePipelineResult, run_image_pipeline
from src.services.image_services.services.projection_service import synthetic_images
from src.services.memory_model.services.file_formats import write_layout, write_weights
from src.utils.command_helper import failed_result, start_run, success_result
from src.utils.file_helper import write_csv
from src.utils.path_helper import ensure_dir, sorted_files

_logger = logging.getLogger(__name__)

COMMAND = "image-pipeline"


def load_images(directory: str | Path | None, count: int, size: int, seed: int) -> list[ImagePattern]:
    """P2 images from ``directory``, or ``count`` synthetic ``size``x``size`` images when it is None."""
    if directory is None:
        return synthetic_images(count, size, size, seed)
    if not Path(directory).is_dir():
        msg = f"image directory not found: {directory}"
        raise FileNotFoundError(msg)
    paths = sorted_files(directory, PGM_SUFFIX)
    if not paths:
        msg = f"no {PGM_SUFFIX} files in {directory}"
        raise InvalidImageError(msg)
    return [read_pgm(path) for path in paths]


def write_images(image_dir: Path, result: ImagePipelineResult) -> int:
    written = 0
    for outcome in result.outcomes:
        for label, image in (("learned", outcome.learned), ("noisy", outcome.noisy), ("denoised", outcome.denoised)):
            write_pgm(image_dir / f"{outcome.name}_{label}{PGM_SUFFIX}", image)
            written += 1
    return written


class ImageController:
    """Controller for the ``image-pipeline`` command."""

    def image_pipeline(self, args: argparse.Namespace, settings: ExperimentSettings) -> CommandResult:
        try:
            config = ImagePipelineConfig(
                levels=args.levels,
                clusters=args.clusters,
                membership=args.membership,
                size_spread=args.size_spread,
                max_constraints=args.max_constraints,
                p_e=args.p_e,
                sat_percentile=args.sat_percentile,
                seed=settings.seed,
                workers=settings.workers,
            )
            images = load_images(args.images, args.count, args.size, settings.seed)
            output_dir = start_run(COMMAND, args, settings)
            result = run_image_pipeline(images, config)
            image_dir = ensure_dir(output_dir / FileConst.IMAGE_DIR)
            written = write_images(image_dir, result)
            write_layout(output_dir / FileConst.LAYOUT, result.layout)
            write_weights(output_dir / FileConst.WEIGHTS, result.weights)
            report = write_csv(
                output_dir / FileConst.IMAGE_REPORT,
                [outcome.to_row() for outcome in result.outcomes],
                CsvConst.IMAGE,
            )
        except (ValidationError, MemoryToolkitError, OSError) as e:
            return failed_result(COMMAND, e)
        improved = sum(outcome.snr_out >= outcome.snr_in for outcome in result.outcomes)
        _logger.info("Denoised %s images; output SNR >= input SNR on %s", len(result.outcomes), improved)
        return success_result(
            report=report,
            images=image_dir,
            pgm_files=written,
            count=len(result.outcomes),
            improved=improved,
            projected_exactly=sum(projection.satisfied for projection in result.projections),
        )


image_controller = ImageController()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(COMMAND, help="Learn from grayscale images and report denoising SNR")
    parser.add_argument("--images", type=Path, default=None, help="Directory of P2 PGM files (synthetic if omitted)")
    parser.add_argument("--count", type=int, default=ImageConst.COUNT, help="Synthetic image count")
    parser.add_argument("--size", type=int, default=ImageConst.SIZE, help="Synthetic image side length")
    parser.add_argument("--levels", type=int, default=ImageConst.LEVELS, help="Quantization levels Q")
    parser.add_argument("--clusters", "-L", type=int, default=ImageConst.CLUSTERS)
    parser.add_argument("--membership", type=float, default=ImageConst.MEMBERSHIP)
    parser.add_argument("--size-spread", type=float, default=0.2)
    parser.add_argument("--max-constraints", type=int, default=ImageConst.MAX_CONSTRAINTS)
    parser.add_argument("--p-e", type=float, default=ImageConst.NOISE, help="Noise on the binary neurons")
    parser.add_argument("--sat-percentile", type=float, default=RecallConst.SAT_PERCENTILE)
    parser.set_defaults(handler=image_controller.image_pipeline)
