"""Keyed deterministic randomness: pixel shuffle and per-area bit matrices.

Everything is a pure function of (key bytes, domain tag, area index), so
encoder and decoder regenerate identical streams from the shared key.
The keystream is SplitMix64; the key is digested with FNV-1a 64.
Matrix rows are generated row by row, so any prefix of rows is
reproducible without knowing the final row count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3

TAG_PERM = 0x5045524D5045524D  # shuffle stream
TAG_MATR = 0x4D4154524D415452  # matrix streams, one per area

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


@dataclass(frozen=True)
class StegoKey:
    """Shared secret; arbitrary non-empty bytes."""

    key_bytes: bytes

    def __post_init__(self):
        if not self.key_bytes:
            raise ValueError("key must be non-empty")

    @classmethod
    def from_text(cls, text: str) -> "StegoKey":
        """UTF-8 text, or raw bytes via a ``hex:`` prefix."""
        if text.startswith("hex:"):
            return cls(bytes.fromhex(text[4:]))
        return cls(text.encode("utf-8"))


def fnv1a64(data: bytes) -> int:
    h = FNV_OFFSET
    for b in data:
        h = ((h ^ b) * FNV_PRIME) & MASK64
    return h


def mix64(x: int) -> int:
    """SplitMix64 output mixing of a 64-bit word."""
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def derive_seed(key: StegoKey, tag: int, area: int = 0) -> int:
    """Seed for the (key, tag, area) stream; streams never alias across tags."""
    return mix64(fnv1a64(key.key_bytes) ^ tag ^ ((area * GAMMA) & MASK64))


class KeyedStream:
    """Sequential SplitMix64 word stream."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_word(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)


def stream_words(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Words ``offset .. offset+count-1`` of the stream, vectorized.

    Word i equals mix64(seed + (i+1)*GAMMA); identical to calling
    ``next_word`` i+1 times on a fresh stream.
    """
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + idx * np.uint64(GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


if _HAVE_NUMBA:

    @njit(cache=True)
    def _fisher_yates(words, perm):  # pragma: no cover - exercised via permutation()
        n = perm.shape[0]
        for t in range(n - 1):
            i = n - 1 - t
            j = words[t] % np.uint64(i + 1)
            tmp = perm[i]
            perm[i] = perm[j]
            perm[j] = tmp

else:

    def _fisher_yates(words, perm):
        n = perm.shape[0]
        for t in range(n - 1):
            i = n - 1 - t
            j = int(words[t]) % (i + 1)
            perm[i], perm[j] = perm[j], perm[i]


def permutation(key: StegoKey, n_total: int) -> np.ndarray:
    """Keyed Fisher-Yates permutation of 0..n_total-1.

    Draw t (for position i = n_total-1-t) is word t of the TAG_PERM
    stream reduced modulo i+1.
    """
    if n_total < 1:
        raise ValueError("n_total must be >= 1")
    perm = np.arange(n_total, dtype=np.int64)
    if n_total == 1:
        return perm
    words = stream_words(derive_seed(key, TAG_PERM), n_total - 1)
    _fisher_yates(words, perm)
    return perm


def matrix_words(key: StegoKey, area: int, rows: int, cols: int,
                 first_row: int = 0) -> np.ndarray:
    """Packed words of rows ``first_row .. first_row+rows-1`` of this area's matrix.

    Each row consumes exactly ceil(cols/64) stream words; bit j of a row
    is bit (j mod 64) of word j//64. Surplus bits of the last word are
    cleared so packed rows compare equal regardless of how they were cut.
    """
    if cols < 1:
        raise ValueError("cols must be >= 1")
    if rows < 0:
        raise ValueError("rows must be >= 0")
    wpr = (cols + 63) // 64
    seed = derive_seed(key, TAG_MATR, area)
    words = stream_words(seed, rows * wpr, offset=first_row * wpr)
    words = words.reshape(rows, wpr)
    tail = cols % 64
    if tail and rows:
        words[:, -1] &= np.uint64((1 << tail) - 1)
    return words


def matrix_rows(key: StegoKey, area: int, rows: int, cols: int) -> list[int]:
    """Rows as Python ints (bit j of the int = column j)."""
    words = matrix_words(key, area, rows, cols)
    return [int.from_bytes(words[r].tobytes(), "little") for r in range(rows)]
