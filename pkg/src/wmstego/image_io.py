"""
Lossless RGB image loading and saving.

An :class:`RgbImage` keeps its pixels as one flat ``uint8`` array in
row-major pixel order, R then G then B inside each pixel.  Channel index
``i`` therefore belongs to pixel ``i // 3`` and colour ``i % 3``.  Every
embedding routine walks the channels in exactly this order.

Only PNG and 24/32-bit BMP are accepted.  JPEG is refused outright since
any lossy re-encode wipes the LSB plane.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import (
    DepthError,
    ImageDecodeError,
    ImageFormatError,
    ImageIOError,
    LossyCoverError,
)

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"
BMP_SIGNATURE = b"BM"
JPEG_SIGNATURE = b"\xff\xd8\xff"

SAVE_FORMATS = {".png": "PNG", ".bmp": "BMP"}
LOSSY_EXTENSIONS = {".jpg", ".jpeg", ".jpe", ".jfif"}
LOSSY_FORMATS = {"JPEG", "MPO"}

# PNG IHDR colour types
_PNG_GRAY, _PNG_RGB, _PNG_PALETTE, _PNG_GRAY_ALPHA, _PNG_RGBA = 0, 2, 3, 4, 6


@dataclass(eq=False)
class RgbImage:
    width: int
    height: int
    channels: np.ndarray
    alpha: Optional[np.ndarray] = field(default=None)

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"image dimensions must be positive, got {self.width}x{self.height}")
        ch = np.asarray(self.channels)
        if ch.dtype != np.uint8:
            if ch.size and (ch.min() < 0 or ch.max() > 255):
                raise ValueError("channel values must lie in [0, 255]")
            ch = ch.astype(np.uint8)
        ch = ch.reshape(-1)
        if ch.size != self.width * self.height * 3:
            raise ValueError(
                f"expected {self.width * self.height * 3} channel bytes, got {ch.size}"
            )
        self.channels = ch
        if self.alpha is not None:
            a = np.asarray(self.alpha, dtype=np.uint8).reshape(-1)
            if a.size != self.width * self.height:
                raise ValueError(f"expected {self.width * self.height} alpha bytes, got {a.size}")
            self.alpha = a

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "RgbImage":
        """Build from an ``(H, W, 3)`` or ``(H, W, 4)`` uint8 array."""
        arr = np.asarray(arr)
        if arr.ndim != 3 or arr.shape[2] not in (3, 4):
            raise ValueError(f"expected (H, W, 3|4) array, got shape {arr.shape}")
        h, w = arr.shape[:2]
        alpha = arr[..., 3].copy() if arr.shape[2] == 4 else None
        return cls(w, h, np.ascontiguousarray(arr[..., :3]).reshape(-1).copy(), alpha)

    def to_array(self) -> np.ndarray:
        """``(H, W, 3)`` view of the channels (``(H, W, 4)`` if alpha is present)."""
        rgb = self.channels.reshape(self.height, self.width, 3)
        if self.alpha is None:
            return rgb
        return np.dstack([rgb, self.alpha.reshape(self.height, self.width)])

    @property
    def size(self) -> int:
        """Number of RGB channel bytes."""
        return self.channels.size

    def with_channels(self, channels: np.ndarray) -> "RgbImage":
        alpha = None if self.alpha is None else self.alpha.copy()
        return RgbImage(self.width, self.height, channels, alpha)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RgbImage):
            return NotImplemented
        if (self.width, self.height) != (other.width, other.height):
            return False
        if (self.alpha is None) != (other.alpha is None):
            return False
        if self.alpha is not None and not np.array_equal(self.alpha, other.alpha):
            return False
        return bool(np.array_equal(self.channels, other.channels))


def _check_png_header(head: bytes) -> None:
    # IHDR is always the first chunk: 8 sig + 4 len + 4 type, then w, h, depth, colour type
    if len(head) < 26 or head[12:16] != b"IHDR":
        raise ImageDecodeError("PNG is missing its IHDR chunk")
    depth, colour = head[24], head[25]
    if colour in (_PNG_GRAY, _PNG_GRAY_ALPHA):
        raise ImageFormatError("grayscale PNG covers are not supported; an RGB image is required")
    if colour == _PNG_PALETTE:
        raise ImageFormatError("palette PNG covers are not supported; an RGB image is required")
    if colour not in (_PNG_RGB, _PNG_RGBA):
        raise ImageDecodeError(f"invalid PNG colour type {colour}")
    if depth != 8:
        raise DepthError(f"PNG has {depth} bits per channel; only 8 is supported")


def _check_bmp_header(head: bytes) -> None:
    if len(head) < 30:
        raise ImageDecodeError("BMP header is truncated")
    bpp = int.from_bytes(head[28:30], "little")
    if bpp <= 8:
        raise ImageFormatError(f"{bpp}-bit BMP is palette-based; an RGB image is required")
    if bpp not in (24, 32):
        raise DepthError(f"{bpp}-bit BMP does not store 8 bits per channel")


def load_image(path: str | os.PathLike) -> RgbImage:
    """
    Read a PNG or BMP file into an :class:`RgbImage`.

    RGBA sources keep their alpha plane in ``RgbImage.alpha``; it is never
    touched by embedding and is written back unchanged by :func:`save_image`.
    """
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            head = fh.read(64)
    except OSError as exc:
        raise ImageIOError(f"cannot read {path}: {exc.strerror or exc}") from exc

    if head.startswith(JPEG_SIGNATURE):
        raise LossyCoverError(f"{path.name} is a JPEG")
    if head.startswith(PNG_SIGNATURE):
        _check_png_header(head)
    elif head.startswith(BMP_SIGNATURE):
        _check_bmp_header(head)
    else:
        fmt = None
        try:
            with Image.open(path) as probe:
                fmt = probe.format
        except (UnidentifiedImageError, OSError):
            pass
        if fmt in LOSSY_FORMATS:
            raise LossyCoverError(f"{path.name} is {fmt}")
        raise ImageFormatError(
            f"{path.name}: unsupported format {fmt or 'unknown'}; use PNG or BMP"
        )

    try:
        with Image.open(path) as img:
            img.load()
            mode = img.mode
            arr = np.asarray(img)
    except (UnidentifiedImageError, OSError, SyntaxError, ValueError) as exc:
        raise ImageDecodeError(f"cannot decode {path.name}: {exc}") from exc

    if mode in ("RGB", "RGBA"):
        return RgbImage.from_array(arr)
    raise ImageFormatError(f"{path.name}: unsupported pixel mode {mode}")


def save_image(img: RgbImage, path: str | os.PathLike) -> None:
    """Write ``img`` losslessly; the extension picks PNG or BMP."""
    path = Path(path)
    ext = path.suffix.lower()
    if ext in LOSSY_EXTENSIONS:
        raise LossyCoverError(f"refusing to write {path.name}")
    fmt = SAVE_FORMATS.get(ext)
    if fmt is None:
        raise ImageFormatError(f"unsupported output extension {ext or '(none)'!r}; use .png or .bmp")
    if fmt == "BMP" and img.alpha is not None:
        # 32-bit BMP alpha does not survive a round-trip through common decoders
        raise ImageFormatError("images with alpha must be saved as PNG")

    pil = Image.fromarray(np.ascontiguousarray(img.to_array()))
    try:
        pil.save(path, format=fmt)
    except OSError as exc:
        raise ImageIOError(f"cannot write {path}: {exc.strerror or exc}") from exc
