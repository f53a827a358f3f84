import logging
import sys
from pathlib import Path

from src.constants.app_constants import TEXT_ENCODING


def setup_logging(logger=None, level=logging.INFO, log_file: str | Path | None = None):
    if logger is None:
        logger = logging.getLogger()
    if logger.handlers:
        return
    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    stream_handler = logging.StreamHandler(sys.stdout)
    stream_handler.setFormatter(formatter)
    if log_file is not None:
        file_handler = logging.FileHandler(log_file, encoding=TEXT_ENCODING)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    logger.addHandler(stream_handler)
    logger.setLevel(level)
