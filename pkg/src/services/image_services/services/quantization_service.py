import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.constants.app_constants import ImageConst
from src.services.image_services.models.image_pattern import ImagePattern
from src.services.image_services.services.exceptions import InvalidAlphabetError, MalformedPatternError
from src.services.memory_model.models.dataset import Dataset


def quantize(image: ImagePattern, Q: int) -> NDArray[np.int64]:
    """level = floor(pixel * Q / 256)."""
    if Q < 2:  # noqa: PLR2004
        msg = f"Q must be at least 2, got {Q}"
        raise InvalidAlphabetError(msg)
    return (image.pixels * Q) // ImageConst.PIXEL_RANGE


def dequantize(levels: ArrayLike, Q: int, width: int, height: int, name: str = "") -> ImagePattern:
    """Map each level to the centre pixel value of its quantization bin."""
    values = np.asarray(levels, dtype=np.int64)
    pixels = ((2 * values + 1) * ImageConst.PIXEL_RANGE) // (2 * Q)
    return ImagePattern(width, height, np.clip(pixels, 0, ImageConst.PIXEL_RANGE - 1), name=name)


def bits_per_symbol(Q: int) -> int:
    if Q < 2 or Q & (Q - 1):  # noqa: PLR2004
        msg = f"binary expansion needs Q to be a power of two, got {Q}"
        raise InvalidAlphabetError(msg)
    return Q.bit_length() - 1


def binary_expand(x: ArrayLike, Q: int) -> NDArray[np.int64]:
    """Replace each entry by its log2(Q) bits, most significant first."""
    bits = bits_per_symbol(Q)
    values = np.asarray(x, dtype=np.int64)
    shifts = np.arange(bits - 1, -1, -1, dtype=np.int64)
    return ((values[:, None] >> shifts) & 1).ravel()


def binary_collapse(b: ArrayLike, Q: int) -> NDArray[np.int64]:
    bits = bits_per_symbol(Q)
    values = np.asarray(b, dtype=np.int64)
    if values.ndim != 1 or values.size % bits:
        msg = f"binary pattern of length {values.size} is not a multiple of {bits} bits"
        raise MalformedPatternError(msg)
    if np.any((values != 0) & (values != 1)):
        msg = "binary pattern entries must be 0 or 1"
        raise MalformedPatternError(msg)
    weights = np.left_shift(1, np.arange(bits - 1, -1, -1, dtype=np.int64))
    return values.reshape(-1, bits) @ weights


def expand_dataset(dataset: Dataset) -> Dataset:
    """Binary dataset (Q = 2) of every pattern's big-endian expansion."""
    rows = [binary_expand(row, dataset.alphabet_size) for row in dataset.patterns]
    width = dataset.n * bits_per_symbol(dataset.alphabet_size)
    return Dataset(np.array(rows, dtype=np.int64).reshape(dataset.count, width), 2)
