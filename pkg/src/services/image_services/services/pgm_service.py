"""Plain portable graymap (P2) reading and writing."""

import logging
from pathlib import Path

import numpy as np

from src.constants.app_constants import TEXT_ENCODING, ImageConst
from src.services.image_services.models.image_pattern import ImagePattern
from src.services.image_services.services.exceptions import InvalidImageError, PgmFormatError

_logger = logging.getLogger(__name__)

PGM_MAGIC = "P2"
PGM_SUFFIX = ".pgm"
PGM_ROW_WIDTH = 16


def _tokens(text: str) -> list[str]:
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    return tokens


def read_pgm(path: str | Path) -> ImagePattern:
    """Read a P2 file; pixel values with a maxval other than 255 are rescaled to [0, 255]."""
    tokens = _tokens(Path(path).read_text(encoding=TEXT_ENCODING))
    if len(tokens) < 4 or tokens[0] != PGM_MAGIC:  # noqa: PLR2004
        msg = f"{path}: not a plain P2 graymap"
        raise PgmFormatError(msg)
    try:
        width, height, maxval = (int(token) for token in tokens[1:4])
        values = np.array([int(token) for token in tokens[4:]], dtype=np.int64)
    except ValueError as e:
        msg = f"{path}: non-integer token in graymap"
        raise PgmFormatError(msg) from e
    if maxval < 1 or values.size != width * height:
        msg = f"{path}: expected {width * height} pixels with maxval >= 1, found {values.size}"
        raise PgmFormatError(msg)
    if values.size and (values.min() < 0 or values.max() > maxval):
        msg = f"{path}: pixel outside [0, {maxval}]"
        raise PgmFormatError(msg)
    top = ImageConst.PIXEL_RANGE - 1
    if maxval != top:
        values = np.rint(values * top / maxval).astype(np.int64)
    try:
        return ImagePattern(width, height, values, name=Path(path).stem)
    except InvalidImageError as e:
        msg = f"{path}: {e}"
        raise PgmFormatError(msg) from e


def write_pgm(path: str | Path, image: ImagePattern) -> Path:
    lines = [PGM_MAGIC, f"{image.width} {image.height}", str(ImageConst.PIXEL_RANGE - 1)]
    for row in image.grid():
        for start in range(0, row.size, PGM_ROW_WIDTH):
            lines.append(" ".join(str(int(v)) for v in row[start : start + PGM_ROW_WIDTH]))
    Path(path).write_text("\n".join(lines) + "\n", encoding=TEXT_ENCODING)
    return Path(path)
