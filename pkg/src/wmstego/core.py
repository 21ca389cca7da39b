"""
Weighted-matching and simple LSB embedding.

Both schemes write one stream bit per channel byte and touch only bit 0.
The stream is the 32-bit length header followed by the payload bits.

Weighted matching never stores the secret bit itself.  It takes the
majority of bits 1..3 of the byte (the "weighted bit") and stores in the
LSB whether that majority equals the secret bit: 1 on a match, 0 otherwise.
Since bits 1..3 are left alone the receiver can recompute the majority from
the stego image alone and undo the comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bitstream import HEADER_BITS, BitsLike, as_bits, bits_to_bytes, build_stream, decode_header
from .errors import CapacityError, CorruptStegoError
from .image_io import RgbImage


class Algorithm(str, enum.Enum):
    WEIGHTED = "weighted"
    LSB = "lsb"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Algorithm.WEIGHTED: "Proposed algorithm",
    Algorithm.LSB: "Simple LSB insertion",
}


def _majority_table() -> np.ndarray:
    v = np.arange(256, dtype=np.uint8)
    votes = ((v >> 1) & 1) + ((v >> 2) & 1) + ((v >> 3) & 1)
    return (votes >= 2).astype(np.uint8)


MAJORITY = _majority_table()
MAJORITY.setflags(write=False)


def majority_bit(b: int) -> int:
    """Majority value of bit positions 1, 2 and 3 of ``b`` (three voters, so never a tie)."""
    if not 0 <= b <= 255:
        raise ValueError(f"channel byte out of range: {b}")
    return int(MAJORITY[b])


@dataclass(frozen=True)
class EmbedResult:
    stego: RgbImage
    algorithm: Algorithm
    bits_embedded: int
    channel_bytes_used: int
    lsb_flips: int


def capacity(img: RgbImage) -> int:
    """Largest payload, in bytes, that fits after the 32-bit header."""
    n = img.size
    if n < HEADER_BITS:
        return 0
    return (n - HEADER_BITS) // 8


def embed_stream(channels: np.ndarray, bits: BitsLike, algorithm: Algorithm) -> np.ndarray:
    """
    Write ``bits`` into the leading channel bytes and return a new array.

    No header is added here; this is the raw per-byte rule.  Bytes past
    ``len(bits)`` are copied unchanged.
    """
    algorithm = Algorithm(algorithm)
    bits = as_bits(bits)
    src = np.asarray(channels, dtype=np.uint8).reshape(-1)
    if bits.size > src.size:
        raise ValueError(f"{bits.size} bits do not fit in {src.size} channel bytes")
    out = src.copy()
    head = src[: bits.size]
    if algorithm is Algorithm.WEIGHTED:
        lsb = (MAJORITY[head] == bits).astype(np.uint8)
    else:
        lsb = bits
    out[: bits.size] = (head & 0xFE) | lsb
    return out


def extract_stream(channels: np.ndarray, count: int, algorithm: Algorithm) -> np.ndarray:
    """Read ``count`` stream bits from the leading channel bytes."""
    algorithm = Algorithm(algorithm)
    src = np.asarray(channels, dtype=np.uint8).reshape(-1)
    if count > src.size:
        raise ValueError(f"cannot read {count} bits from {src.size} channel bytes")
    head = src[:count]
    lsb = head & 1
    if algorithm is Algorithm.WEIGHTED:
        # LSB 1: bit equals the majority; LSB 0: bit is its negation
        return MAJORITY[head] ^ lsb ^ 1
    return lsb


def embed(cover: RgbImage, payload: bytes, algorithm: Algorithm = Algorithm.WEIGHTED) -> EmbedResult:
    payload = bytes(payload)
    available = capacity(cover)
    if cover.size < HEADER_BITS:
        raise CapacityError(
            len(payload), 0, f"{cover.size} channel bytes cannot hold the {HEADER_BITS}-bit header"
        )
    if len(payload) > available:
        raise CapacityError(len(payload), available)
    stream = build_stream(payload)
    stego_ch = embed_stream(cover.channels, stream, algorithm)
    used = stream.size
    flips = int(np.count_nonzero((stego_ch[:used] ^ cover.channels[:used]) & 1))
    return EmbedResult(
        stego=cover.with_channels(stego_ch),
        algorithm=Algorithm(algorithm),
        bits_embedded=used,
        channel_bytes_used=used,
        lsb_flips=flips,
    )


def extract(stego: RgbImage, algorithm: Algorithm = Algorithm.WEIGHTED) -> bytes:
    ch = stego.channels
    if ch.size < HEADER_BITS:
        raise CorruptStegoError(
            f"image has {ch.size} channel bytes, too few to hold the {HEADER_BITS}-bit header"
        )
    length = decode_header(extract_stream(ch, HEADER_BITS, algorithm))
    # bounds check before touching the payload region
    if length > capacity(stego):
        raise CorruptStegoError(
            f"header declares {length} payload bytes but the image holds at most {capacity(stego)}"
        )
    bits = extract_stream(ch, HEADER_BITS + 8 * length, algorithm)[HEADER_BITS:]
    return bits_to_bytes(bits)


def embed_weighted(cover: RgbImage, payload: bytes) -> EmbedResult:
    return embed(cover, payload, Algorithm.WEIGHTED)


def extract_weighted(stego: RgbImage) -> bytes:
    return extract(stego, Algorithm.WEIGHTED)


def embed_lsb(cover: RgbImage, payload: bytes) -> EmbedResult:
    return embed(cover, payload, Algorithm.LSB)


def extract_lsb(stego: RgbImage) -> bytes:
    return extract(stego, Algorithm.LSB)
