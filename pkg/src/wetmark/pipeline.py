"""Whole-image embedding and extraction.

The flippability mask is computed once on the cover, the pixel indices
are shuffled with the keyed permutation, and consecutive blocks of 4096
shuffled positions form independent areas. The message spills greedily
from area to area; areas reached after the message is exhausted still
carry a zero-length header so the blind decoder reads every area
safely. Pixels beyond the last full area are never touched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import flippability, gf2, prng, wpc
from .bitmap import BinaryImage
from .flippability import FlippabilityMask
from .prng import StegoKey
from .wpc import AREA_SIZE, AreaCodec, HeaderCapacityError


class ImageTooSmallError(ValueError):
    """Image has fewer pixels than one area (or is under 3x3)."""


class MessageTooLongError(ValueError):
    """Message exceeds the image's embedding capacity."""


@dataclass(frozen=True)
class AreaRecord:
    area: int
    k: int          # flippable pixels in the area
    q_p: int        # payload bits embedded
    flips: int

    def to_dict(self) -> dict:
        return {"area": self.area, "k": self.k, "q_p": self.q_p,
                "flips": self.flips}


@dataclass(frozen=True)
class EmbedReport:
    """Per-area and total accounting of an embed or capacity run."""

    n_areas: int               # N_A
    n_flippable: int           # N_FP over used areas
    n_embedded: int            # N_E, total payload bits
    leftover_pixels: int
    per_area: tuple[AreaRecord, ...]

    def to_dict(self) -> dict:
        return {
            "N_A": self.n_areas,
            "N_FP": self.n_flippable,
            "N_E": self.n_embedded,
            "leftover_pixels": self.leftover_pixels,
            "areas": [a.to_dict() for a in self.per_area],
        }

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("indent", 2)
        return json.dumps(self.to_dict(), **kwargs)


@dataclass(frozen=True)
class EmbedPlan:
    permutation: np.ndarray = field(repr=False)
    n_areas: int
    leftover_pixels: int
    mask: FlippabilityMask

    def area_slice(self, a: int) -> np.ndarray:
        """Pixel indices (raster order domain) covered by area a."""
        return self.permutation[a * AREA_SIZE:(a + 1) * AREA_SIZE]


def plan(img: BinaryImage, key: StegoKey) -> EmbedPlan:
    n_pixels = img.width * img.height
    if n_pixels < AREA_SIZE or img.width < 3 or img.height < 3:
        raise ImageTooSmallError(
            f"{img.width}x{img.height}: need at least {AREA_SIZE} pixels "
            "and 3x3 geometry")
    perm = prng.permutation(key, n_pixels)
    n_areas = n_pixels // AREA_SIZE
    mask = flippability.compute_mask(img)
    return EmbedPlan(perm, n_areas, n_pixels - n_areas * AREA_SIZE, mask)


def _area_inputs(bits: np.ndarray, flip_flags: np.ndarray,
                 p: EmbedPlan, a: int):
    idx = p.area_slice(a)
    cover_words = wpc.pack_bits(bits[idx])
    flippable = np.nonzero(flip_flags[idx])[0]
    return idx, cover_words, flippable


def embed(img: BinaryImage, key: StegoKey,
          message: np.ndarray) -> tuple[BinaryImage, EmbedReport]:
    """Embed ``message`` (uint8 bit array) and return (stego, report)."""
    p = plan(img, key)
    message = np.asarray(message, dtype=np.uint8)
    flip_flags = p.mask.as_bool()
    out_bits = img.bits.copy()
    pos = 0
    records = []
    n_fp = 0
    for a in range(p.n_areas):
        idx, cover_words, flippable = _area_inputs(img.bits, flip_flags, p, a)
        codec = AreaCodec(key, a)
        result, consumed = wpc.embed_area(cover_words, flippable, codec,
                                          message[pos:])
        pos += consumed
        n_fp += len(flippable)
        records.append(AreaRecord(a, len(flippable), result.payload_bits_embedded,
                                  result.flips_made))
        if result.flips_made:
            changed = np.nonzero(
                wpc.unpack_bits(result.modified_words, AREA_SIZE)
                ^ img.bits[idx])[0]
            out_bits[idx[changed]] ^= 1
    if pos < len(message):
        raise MessageTooLongError(
            f"capacity exhausted after {pos} of {len(message)} bits")
    report = EmbedReport(p.n_areas, n_fp, pos, p.leftover_pixels,
                         tuple(records))
    return BinaryImage(img.width, img.height, out_bits), report


def extract(img: BinaryImage, key: StegoKey) -> np.ndarray:
    """Blindly extract the embedded bit sequence using only the key."""
    n_pixels = img.width * img.height
    if n_pixels < AREA_SIZE or img.width < 3 or img.height < 3:
        raise ImageTooSmallError(
            f"{img.width}x{img.height}: need at least {AREA_SIZE} pixels "
            "and 3x3 geometry")
    perm = prng.permutation(key, n_pixels)
    n_areas = n_pixels // AREA_SIZE
    chunks = []
    for a in range(n_areas):
        idx = perm[a * AREA_SIZE:(a + 1) * AREA_SIZE]
        words = wpc.pack_bits(img.bits[idx])
        chunks.append(wpc.extract_area(words, AreaCodec(key, a)))
    if not chunks:
        return np.zeros(0, dtype=np.uint8)
    return np.concatenate(chunks)


def capacity(img: BinaryImage, key: StegoKey) -> EmbedReport:
    """Capacity accounting without modifying any pixel."""
    p = plan(img, key)
    flip_flags = p.mask.as_bool()
    records = []
    n_fp = 0
    total = 0
    for a in range(p.n_areas):
        _, _, flippable = _area_inputs(img.bits, flip_flags, p, a)
        codec = AreaCodec(key, a)
        hb = codec.header_bits
        k = len(flippable)
        d_words = prng.matrix_words(key, a, k, AREA_SIZE)
        rows = wpc.restrict_columns(d_words, flippable)
        prefix = gf2.max_independent_prefix_words(rows)
        if prefix < hb:
            raise HeaderCapacityError(
                f"area {a}: rank prefix {prefix} < header size {hb}")
        cap_a = max(0, min(k, prefix) - hb)
        n_fp += k
        total += cap_a
        records.append(AreaRecord(a, k, cap_a, 0))
    return EmbedReport(p.n_areas, n_fp, total, p.leftover_pixels,
                       tuple(records))
