from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.constants.app_constants import ImageConst
from src.services.image_services.services.exceptions import InvalidImageError


@dataclass(frozen=True, eq=False)
class ImagePattern:
    """Grayscale image stored row-major as width * height pixels in [0, 255]."""

    width: int
    height: int
    pixels: NDArray[np.int64]
    name: str = ""

    def __post_init__(self) -> None:
        pixels = np.array(self.pixels, dtype=np.int64, copy=True).ravel()
        if self.width < 1 or self.height < 1 or pixels.size != self.width * self.height:
            msg = f"{pixels.size} pixels do not fill a {self.width}x{self.height} image"
            raise InvalidImageError(msg)
        if pixels.size and (pixels.min() < 0 or pixels.max() > ImageConst.PIXEL_RANGE - 1):
            msg = f"pixels must lie in [0, {ImageConst.PIXEL_RANGE - 1}]"
            raise InvalidImageError(msg)
        pixels.setflags(write=False)
        object.__setattr__(self, "pixels", pixels)

    @classmethod
    def from_grid(cls, grid: ArrayLike, name: str = "") -> "ImagePattern":
        values = np.asarray(grid, dtype=np.int64)
        return cls(width=values.shape[1], height=values.shape[0], pixels=values.ravel(), name=name)

    def grid(self) -> NDArray[np.int64]:
        return self.pixels.reshape(self.height, self.width)
