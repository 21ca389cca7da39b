"""
Byte/bit conversions and the 32-bit length header.

Bit streams are 1-D ``numpy.uint8`` arrays holding only 0 and 1.  Bits
within a byte are emitted most-significant first, so ``b"F"`` becomes
``0 1 0 0 0 1 1 0``.
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from .errors import HeaderOverflowError, MalformedHeaderError, MalformedStreamError

HEADER_BITS = 32
MAX_PAYLOAD_LEN = 2**HEADER_BITS - 1

BitStream = np.ndarray
BitsLike = Union[np.ndarray, Iterable[int]]


def as_bits(bits: BitsLike) -> BitStream:
    """Coerce a sequence of 0/1 values into a bit stream, validating values."""
    arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise MalformedStreamError("bit stream may only contain 0 and 1")
    return arr.astype(np.uint8, copy=False)


def bytes_to_bits(payload: bytes | bytearray | memoryview) -> BitStream:
    data = np.frombuffer(bytes(payload), dtype=np.uint8)
    return np.unpackbits(data)


def bits_to_bytes(bits: BitsLike) -> bytes:
    arr = as_bits(bits)
    if arr.size % 8:
        raise MalformedStreamError(
            f"bit stream length {arr.size} is not a multiple of 8"
        )
    return np.packbits(arr).tobytes()


def encode_header(n: int) -> BitStream:
    """Return the 32-bit big-endian encoding of a payload length in bytes."""
    if not 0 <= n <= MAX_PAYLOAD_LEN:
        raise HeaderOverflowError(
            f"payload length {n} outside [0, {MAX_PAYLOAD_LEN}]"
        )
    return bytes_to_bits(int(n).to_bytes(4, "big"))


def decode_header(bits: BitsLike) -> int:
    arr = as_bits(bits)
    if arr.size != HEADER_BITS:
        raise MalformedHeaderError(
            f"header must be {HEADER_BITS} bits, got {arr.size}"
        )
    return int.from_bytes(np.packbits(arr).tobytes(), "big")


def build_stream(payload: bytes) -> BitStream:
    """Header followed by payload bits: the exact sequence written into a cover."""
    return np.concatenate([encode_header(len(payload)), bytes_to_bits(payload)])
