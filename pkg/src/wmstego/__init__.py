"""Weighted-matching LSB steganography for RGB images."""

__version__ = "0.1.0"

from .bitstream import bits_to_bytes, bytes_to_bits, decode_header, encode_header
from .core import (
    Algorithm,
    EmbedResult,
    capacity,
    embed,
    embed_lsb,
    embed_stream,
    embed_weighted,
    extract,
    extract_lsb,
    extract_stream,
    extract_weighted,
    majority_bit,
)
from .errors import (
    CapacityError,
    CorruptStegoError,
    DepthError,
    HeaderOverflowError,
    ImageDecodeError,
    ImageFormatError,
    ImageIOError,
    LossyCoverError,
    MalformedHeaderError,
    MalformedStreamError,
    ShapeError,
    StegoError,
)
from .image_io import RgbImage, load_image, save_image
from .metrics import PsnrReport, mse, psnr
