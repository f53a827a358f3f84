import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from src.config.commands import init_commands
from src.config.log_setup import setup_logging
from src.config.settings import load_settings
from src.constants.app_constants import FileConst
from src.utils.command_helper import finish_run
from src.utils.path_helper import ensure_dir

logger = logging.getLogger(__name__)

PROG = "clustered-memory"
TRUE_VALUES = frozenset({"1", "true", "yes", "on"})


def global_parser() -> argparse.ArgumentParser:
    """Options shared by every command; they precede the command name and fall back to the config file."""
    parser = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    parser.add_argument("--config", type=Path, default=None, help="Flat key=value config file")
    parser.add_argument("--seed", type=int, default=None, help="Root random seed (default 0)")
    parser.add_argument("--output-dir", type=Path, default=None, help="Run output directory (default runs)")
    parser.add_argument("--workers", type=int, default=None, help="Worker threads (default 1)")
    parser.add_argument("--log-level", default=None, help="Logging level (default INFO)")
    return parser


def build_parser(parents: Sequence[argparse.ArgumentParser] = ()) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Clustered neural associative memory toolkit",
        parents=list(parents),
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    init_commands(subparsers)
    return parser


def apply_command_defaults(parser: argparse.ArgumentParser, defaults: dict[str, Any]) -> None:
    """Config-file keys become flag defaults; a required flag they cover becomes optional."""
    actions = parser._actions  # noqa: SLF001
    subparsers = next(action for action in actions if isinstance(action, argparse._SubParsersAction))  # noqa: SLF001
    for subparser in subparsers.choices.values():
        for action in subparser._actions:  # noqa: SLF001
            if action.dest not in defaults:
                continue
            value = defaults[action.dest]
            if isinstance(action, argparse._StoreTrueAction):  # noqa: SLF001
                value = str(value).strip().lower() in TRUE_VALUES
            action.default = value
            action.required = False


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, configure logging and dispatch to the selected command."""
    arguments = list(sys.argv[1:] if argv is None else argv)
    options = global_parser()
    known, _ = options.parse_known_args(arguments)
    try:
        settings = load_settings(
            known.config,
            seed=known.seed,
            output_dir=known.output_dir,
            workers=known.workers,
            log_level=known.log_level,
        )
    except ValidationError as e:
        options.exit(2, f"{PROG}: error: invalid settings: {e}\n")

    parser = build_parser(parents=[options])
    apply_command_defaults(parser, settings.command_defaults())
    args = parser.parse_args(arguments)

    setup_logging(level=settings.log_level, log_file=ensure_dir(settings.output_dir) / FileConst.LOG_FILE)
    result = args.handler(args, settings)
    finish_run(settings.output_dir, result)
    if result.error:
        logger.error("%s failed: %s", args.command, result.error)
    else:
        logger.info("%s finished: %s", args.command, result.to_dict())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(run())
