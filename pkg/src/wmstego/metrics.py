"""MSE and PSNR between two same-sized RGB images."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ShapeError
from .image_io import RgbImage

PEAK = 255


@dataclass(frozen=True)
class PsnrReport:
    mse: float
    # None stands for "identical": PSNR is unbounded when mse == 0
    psnr_db: Optional[float]

    @property
    def identical(self) -> bool:
        return self.psnr_db is None

    def __str__(self) -> str:
        if self.identical:
            return "identical"
        return f"{self.psnr_db:.4f}"


def _check_shapes(a: RgbImage, b: RgbImage) -> None:
    if (a.width, a.height) != (b.width, b.height):
        raise ShapeError(
            f"image sizes differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )


def squared_error_sum(a: RgbImage, b: RgbImage) -> int:
    _check_shapes(a, b)
    diff = a.channels.astype(np.int64) - b.channels.astype(np.int64)
    return int(np.dot(diff, diff))


def mse(a: RgbImage, b: RgbImage) -> float:
    """Mean squared error over every R, G and B byte; the sum is exact."""
    return squared_error_sum(a, b) / a.size


def psnr(a: RgbImage, b: RgbImage) -> PsnrReport:
    total = squared_error_sum(a, b)
    if total == 0:
        return PsnrReport(0.0, None)
    # 10*log10(255^2 / (total/N)), kept as one ratio of integers
    db = 10.0 * math.log10(PEAK * PEAK * a.size / total)
    return PsnrReport(total / a.size, db)
