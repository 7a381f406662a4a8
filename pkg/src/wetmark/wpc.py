"""Per-area wet paper encoder and blind decoder.

Each area of n pixels carries a header of ceil(log2 n) bits announcing
its payload length, followed by the payload. The keyed matrix D has one
row per message bit; the encoder solves H v = m xor D b over GF(2),
where H is D restricted to the flippable columns, and flips the cover
accordingly. The decoder just computes D b' row by row; it never learns
which pixels were flippable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gf2, prng
from .prng import StegoKey

AREA_SIZE = 4096


class HeaderCapacityError(RuntimeError):
    """An area cannot host even its length header (rank < header bits)."""


@dataclass(frozen=True)
class AreaCodec:
    key: StegoKey
    area_index: int = 0
    n: int = AREA_SIZE

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("area size must be >= 2")

    @property
    def header_bits(self) -> int:
        return (self.n - 1).bit_length()  # ceil(log2 n)


@dataclass(frozen=True)
class AreaEmbedResult:
    modified_words: np.ndarray = field(repr=False)  # b' packed, len n bits
    payload_bits_embedded: int  # q_p
    q_total: int
    flips_made: int


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack n cover bits (uint8 0/1) into uint64 words, LSB-first."""
    packed = np.packbits(bits, bitorder="little")
    pad = (-len(packed)) % 8
    if pad:
        packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
    return packed.view(np.uint64)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    return np.unpackbits(words.view(np.uint8), bitorder="little")[:n]


def restrict_columns(rows_words: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Rows of D restricted to the given columns, re-packed as words."""
    nrows = len(rows_words)
    if len(cols) == 0:
        return np.zeros((nrows, 1), dtype=np.uint64)
    word_idx = cols // 64
    bit_idx = (cols % 64).astype(np.uint64)
    bits = ((rows_words[:, word_idx] >> bit_idx) & np.uint64(1)).astype(np.uint8)
    packed = np.packbits(bits, axis=1, bitorder="little")
    pad = (-packed.shape[1]) % 8
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    return np.ascontiguousarray(packed).view(np.uint64)


def embed_area(cover_words: np.ndarray, flippable: np.ndarray,
               codec: AreaCodec, message: np.ndarray) -> tuple[AreaEmbedResult, int]:
    """Embed as much of ``message`` as the area admits.

    Returns the result plus the number of payload bits consumed.
    ``cover_words`` is the area's n cover bits packed; ``flippable``
    holds within-area positions (sorted); ``message`` is the remaining
    bit sequence.
    """
    hb = codec.header_bits
    flippable = np.asarray(flippable, dtype=np.int64)
    k = len(flippable)
    cap = (1 << hb) - 1
    desired = min(len(message), max(0, k - hb), cap)

    gen = hb + desired
    d_words = prng.matrix_words(codec.key, codec.area_index, gen, codec.n)
    h_rows = restrict_columns(d_words, flippable)
    p = gf2.max_independent_prefix_words(h_rows)
    if p < hb:
        raise HeaderCapacityError(
            f"area {codec.area_index}: only {p} independent rows over "
            f"{k} flippable pixels, need {hb} for the header")
    q_p = min(desired, p - hb)
    q = hb + q_p

    header = [(q_p >> (hb - 1 - i)) & 1 for i in range(hb)]  # big-endian
    m_bits = np.concatenate([np.array(header, dtype=np.uint8),
                             np.asarray(message[:q_p], dtype=np.uint8)])
    syndrome = gf2.mat_vec_words(d_words[:q], cover_words)
    v = gf2.solve_words(h_rows[:q], k, m_bits ^ syndrome)
    assert v is not None, "full-rank prefix cannot be inconsistent"

    v_bits = np.unpackbits(v.view(np.uint8), bitorder="little")[:k]
    flip_at = flippable[v_bits == 1]
    modified = cover_words.copy()
    if len(flip_at):
        delta = np.zeros(codec.n, dtype=np.uint8)
        delta[flip_at] = 1
        modified ^= pack_bits(delta)
    return AreaEmbedResult(modified, q_p, q, int(len(flip_at))), q_p


def extract_area(received_words: np.ndarray, codec: AreaCodec) -> np.ndarray:
    """Blindly read this area's payload bits from the received vector."""
    hb = codec.header_bits
    head_rows = prng.matrix_words(codec.key, codec.area_index, hb, codec.n)
    head = gf2.mat_vec_words(head_rows, received_words)
    q_p = 0
    for b in head:
        q_p = (q_p << 1) | int(b)
    pay_rows = prng.matrix_words(codec.key, codec.area_index, q_p, codec.n,
                                 first_row=hb)
    return gf2.mat_vec_words(pay_rows, received_words)
