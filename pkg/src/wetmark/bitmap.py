"""1-bit raster images with PBM (P1/P4) load/store.

Internally a pixel value of 1 means black and 0 means white, which is
also PBM's convention, so no inversion happens anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_SIDE = 1 << 16


class PbmError(ValueError):
    """Malformed PBM input."""


@dataclass(frozen=True)
class BinaryImage:
    """Immutable 1-bit image; ``bits`` is flat, raster order, uint8 of 0/1."""

    width: int
    height: int
    bits: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("dimensions must be positive")
        if self.width > MAX_SIDE or self.height > MAX_SIDE:
            raise ValueError(f"dimensions exceed {MAX_SIDE}")
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if bits.shape != (self.width * self.height,):
            raise ValueError("bits length must equal width*height")
        if bits.size and bits.max() > 1:
            raise ValueError("bits must be 0 or 1")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    def grid(self) -> np.ndarray:
        """Read-only (height, width) view."""
        return self.bits.reshape(self.height, self.width)

    def __eq__(self, other):
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return (self.width == other.width and self.height == other.height
                and np.array_equal(self.bits, other.bits))


def _tokens(data: bytes):
    """Yield whitespace-separated header tokens, skipping # comments."""
    pos = 0
    n = len(data)
    while True:
        while pos < n and data[pos:pos + 1].isspace():
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] not in (10, 13):
                pos += 1
            continue
        if pos >= n:
            return
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos] != ord("#"):
            pos += 1
        yield start, data[start:pos]


def parse_pbm(data: bytes) -> BinaryImage:
    """Parse a P1 (ASCII) or P4 (binary) PBM byte stream."""
    if len(data) < 2:
        raise PbmError("truncated header")
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        raise PbmError(f"unsupported magic {magic!r}")

    toks = _tokens(data[2:])
    try:
        _, wtok = next(toks)
        _, htok = next(toks)
    except StopIteration:
        raise PbmError("missing dimensions") from None
    try:
        width, height = int(wtok), int(htok)
    except ValueError:
        raise PbmError("non-numeric dimensions") from None
    if width < 1 or height < 1:
        raise PbmError("non-positive dimensions")
    if width > MAX_SIDE or height > MAX_SIDE:
        raise PbmError(f"dimensions exceed {MAX_SIDE}")

    # Locate the end of the height token so the payload can be parsed raw.
    toks_raw = _tokens(data[2:])
    next(toks_raw)
    hstart, htok2 = next(toks_raw)
    body_off = 2 + hstart + len(htok2)

    if magic == b"P1":
        pos = body_off
        n = len(data)
        # Comments permitted only before the first sample.
        while pos < n:
            if data[pos:pos + 1].isspace():
                pos += 1
            elif data[pos] == ord("#"):
                while pos < n and data[pos] not in (10, 13):
                    pos += 1
            else:
                break
        need = width * height
        samples = np.empty(need, dtype=np.uint8)
        count = 0
        while pos < n and count < need:
            ch = data[pos]
            if ch == ord("0"):
                samples[count] = 0
                count += 1
            elif ch == ord("1"):
                samples[count] = 1
                count += 1
            elif not data[pos:pos + 1].isspace():
                raise PbmError(f"invalid P1 sample byte {ch:#x}")
            pos += 1
        if count < need:
            raise PbmError("truncated P1 payload")
        return BinaryImage(width, height, samples)

    # P4: exactly one whitespace byte after the height token, then packed rows.
    payload_off = body_off + 1
    row_bytes = (width + 7) // 8
    need = row_bytes * height
    payload = data[payload_off:payload_off + need]
    if len(payload) < need:
        raise PbmError("truncated P4 payload")
    rows = np.frombuffer(payload, dtype=np.uint8).reshape(height, row_bytes)
    unpacked = np.unpackbits(rows, axis=1)[:, :width]  # MSB-first, pad dropped
    return BinaryImage(width, height, unpacked.reshape(-1).copy())


def serialize_pbm(img: BinaryImage, fmt: str = "P4") -> bytes:
    """Serialize to P1 or P4; parse(serialize(img)) == img."""
    fmt = fmt.upper()
    if fmt == "P1":
        lines = [b"P1", f"{img.width} {img.height}".encode()]
        for y in range(img.height):
            row = img.grid()[y]
            lines.append(" ".join(str(int(b)) for b in row).encode())
        return b"\n".join(lines) + b"\n"
    if fmt == "P4":
        packed = np.packbits(img.grid(), axis=1)  # MSB-first, zero pad
        header = f"P4\n{img.width} {img.height}\n".encode()
        return header + packed.tobytes()
    raise ValueError(f"unknown format {fmt!r}")


def flip_pixel(img: BinaryImage, index: int) -> BinaryImage:
    """Return a copy with the bit at ``index`` complemented."""
    if not 0 <= index < img.width * img.height:
        raise IndexError(f"pixel index {index} out of range")
    bits = img.bits.copy()
    bits[index] ^= 1
    return BinaryImage(img.width, img.height, bits)
