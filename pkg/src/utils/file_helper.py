import logging
import platform
from collections.abc import Mapping, Sequence
from importlib import metadata
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from dotenv import dotenv_values

from src.constants.app_constants import TEXT_ENCODING, CsvConst, FileConst

_logger = logging.getLogger(__name__)

PACKAGE_NAME = "clustered-memory"


def write_csv(path: str | Path, rows: Sequence[Mapping[str, Any]] | pd.DataFrame, columns: list[str]) -> Path:
    """Write rows under a fixed header; floats keep 9 significant digits."""
    frame = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows), columns=columns)
    frame = frame.reindex(columns=columns)
    frame.to_csv(path, index=False, float_format=CsvConst.FLOAT_FORMAT, lineterminator="\n")
    _logger.debug("Wrote %d rows to %s", len(frame), path)
    return Path(path)


def write_key_values(path: str | Path, values: Mapping[str, Any]) -> Path:
    """Write a flat ``key=value`` text file in insertion order."""
    lines = [f"{key}={value}" for key, value in values.items()]
    Path(path).write_text("\n".join(lines) + "\n", encoding=TEXT_ENCODING)
    return Path(path)


def read_key_values(path: str | Path) -> dict[str, str]:
    """Values of a ``key=value`` file as strings; a bare key reads as empty."""
    return {key: value or "" for key, value in dotenv_values(path, encoding=TEXT_ENCODING).items()}


def package_version() -> str:
    try:
        return metadata.version(PACKAGE_NAME)
    except metadata.PackageNotFoundError:
        return "unknown"


def write_run_meta(output_dir: str | Path, command: str, seed: int, arguments: Mapping[str, Any]) -> Path:
    """Record command, seed, arguments and library versions next to a run's outputs."""
    values: dict[str, Any] = {
        "command": command,
        "seed": seed,
        "package": f"{PACKAGE_NAME} {package_version()}",
        "python": platform.python_version(),
        "numpy": np.__version__,
        "pandas": pd.__version__,
    }
    for key in sorted(arguments):
        if key in values:
            continue
        values[key] = arguments[key]
    return write_key_values(Path(output_dir) / FileConst.RUN_META, values)
