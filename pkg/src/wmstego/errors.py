"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class StegoError(Exception):
    """Base class for all wmstego errors."""


class MalformedStreamError(StegoError, ValueError):
    """A bit stream cannot be packed into whole bytes."""


class HeaderOverflowError(StegoError, ValueError):
    """Payload length does not fit the 32-bit header."""


class MalformedHeaderError(StegoError, ValueError):
    """A header bit stream is not exactly 32 bits long."""


class ImageFormatError(StegoError):
    """Unsupported container format, colour type or file extension."""


class LossyCoverError(ImageFormatError):
    def __init__(self, detail: str = ""):
        msg = "lossy cover unsupported"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class DepthError(ImageFormatError):
    """Image does not use 8 bits per channel."""


class ImageDecodeError(StegoError):
    """File claims a supported format but its data cannot be decoded."""


class ImageIOError(StegoError, OSError):
    """Reading or writing an image file failed at the OS level."""


class CapacityError(StegoError):
    """Payload does not fit in the cover image."""

    def __init__(self, required: int, available: int, note: str = ""):
        self.required = required
        self.available = available
        msg = f"payload needs {required} bytes but the cover holds only {available} bytes"
        if note:
            msg = f"{msg} ({note})"
        super().__init__(msg)


class CorruptStegoError(StegoError):
    """Embedded header is unreadable or declares more data than the image holds."""


class ShapeError(StegoError, ValueError):
    """Two images being compared have different dimensions."""
