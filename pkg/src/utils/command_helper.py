import argparse
import logging
from pathlib import Path
from typing import Any

from src.common.service_result import CommandResult
from src.config.settings import ExperimentSettings
from src.constants.app_constants import FileConst
from src.enums.enum import CommandStatusEnum
from src.utils.file_helper import read_key_values, write_key_values, write_run_meta
from src.utils.path_helper import ensure_dir

_logger = logging.getLogger(__name__)


def command_arguments(args: argparse.Namespace) -> dict[str, Any]:
    """Plain argument values of a parsed command, without the dispatch handler."""
    return {
        key: str(value) if isinstance(value, Path) else value
        for key, value in sorted(vars(args).items())
        if key not in {"handler", "config"} and not callable(value)
    }


def start_run(command: str, args: argparse.Namespace, settings: ExperimentSettings) -> Path:
    """Create the output directory and record run.meta for ``command``."""
    output_dir = ensure_dir(settings.output_dir)
    write_run_meta(output_dir, command, settings.seed, command_arguments(args))
    _logger.info("Running %s (seed=%s) into %s", command, settings.seed, output_dir)
    return output_dir


def finish_run(output_dir: str | Path, result: CommandResult) -> None:
    """Append the command outcome to the run.meta written by ``start_run``, if any."""
    meta_path = Path(output_dir) / FileConst.RUN_META
    if not meta_path.is_file():
        return
    values: dict[str, Any] = read_key_values(meta_path)
    outcome = result.to_dict()
    values["status"] = outcome["status"]
    values["error"] = " ".join((outcome["error"] or "").split())
    values.update({f"result.{key}": value for key, value in outcome["data"].items()})
    write_key_values(meta_path, values)


def failed_result(command: str, error: Exception) -> CommandResult:
    _logger.exception("Command %s failed", command)
    return CommandResult(status=CommandStatusEnum.FAILED, error=str(error))


def success_result(**data: Any) -> CommandResult:
    return CommandResult(
        status=CommandStatusEnum.SUCCESS,
        data={key: str(value) if isinstance(value, Path) else value for key, value in data.items()},
    )


def require_file(path: str | Path) -> Path:
    """Existing input file or FileNotFoundError naming it."""
    resolved = Path(path)
    if not resolved.is_file():
        msg = f"input file not found: {resolved}"
        raise FileNotFoundError(msg)
    return resolved
