"""Minimal PNM (PGM/PPM) codec and RGB-to-luminance conversion.

Supports the ASCII (P2/P3) and binary (P5/P6) portable pixmap variants
with maxval 255. Grayscale output is always written as binary P5.
"""

from __future__ import annotations

import numpy as np

GRAY_WEIGHTS = (0.299, 0.587, 0.114)


class PnmError(ValueError):
    """Malformed PNM data. The message names the byte offset of the problem."""


def to_gray(img: np.ndarray) -> np.ndarray:
    """Convert an RGB image to 8-bit grayscale.

    Parameters
    ----------
    img : (H, W, 3) uint8 ndarray
        RGB image, channels last.

    Returns
    -------
    (H, W) uint8 ndarray
        Luminance 0.299*r + 0.587*g + 0.114*b, rounded half-up.
    """
    img = np.asarray(img)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected an (H, W, 3) RGB array, got shape {img.shape}")
    wr, wg, wb = GRAY_WEIGHTS
    acc = wr * img[:, :, 0] + wg * img[:, :, 1] + wb * img[:, :, 2]
    # round half-up; np.round would round halves to even
    gray = np.floor(acc + 0.5)
    return np.clip(gray, 0, 255).astype(np.uint8)


class _Reader:
    """Token scanner over PNM header bytes, tracking the current offset."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def skip_space_and_comments(self) -> None:
        data = self.data
        while self.pos < len(data):
            c = data[self.pos : self.pos + 1]
            if c.isspace():
                self.pos += 1
            elif c == b"#":
                nl = data.find(b"\n", self.pos)
                self.pos = len(data) if nl < 0 else nl + 1
            else:
                return

    def next_token(self, what: str) -> bytes:
        self.skip_space_and_comments()
        start = self.pos
        while self.pos < len(self.data) and not self.data[self.pos : self.pos + 1].isspace():
            self.pos += 1
        if self.pos == start:
            raise PnmError(f"missing {what} at byte {start}")
        return self.data[start : self.pos]

    def next_int(self, what: str) -> int:
        start = self.pos
        tok = self.next_token(what)
        try:
            return int(tok)
        except ValueError:
            raise PnmError(f"invalid {what} {tok!r} at byte {start}") from None


def read_pnm(data: bytes) -> np.ndarray:
    """Decode PNM bytes into an image array.

    P2/P5 yield an (H, W) grayscale array, P3/P6 an (H, W, 3) RGB array,
    both uint8. Only maxval 255 is accepted. Header comments (#) are
    skipped. Raises PnmError naming the byte offset on malformed input.
    """
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise TypeError("read_pnm expects bytes")
    data = bytes(data)
    rd = _Reader(data)
    magic = rd.next_token("magic number")
    if magic not in (b"P2", b"P3", b"P5", b"P6"):
        raise PnmError(f"unsupported magic {magic!r} at byte 0")
    width = rd.next_int("width")
    height = rd.next_int("height")
    if width <= 0 or height <= 0:
        raise PnmError(f"bad dimensions {width}x{height} in header ending at byte {rd.pos}")
    maxval_at = rd.pos
    maxval = rd.next_int("maxval")
    if maxval != 255:
        raise PnmError(f"unsupported maxval {maxval} at byte {maxval_at} (only 255)")

    channels = 3 if magic in (b"P3", b"P6") else 1
    n_values = width * height * channels

    if magic in (b"P5", b"P6"):
        # exactly one whitespace byte separates the header from the payload
        if rd.pos >= len(data) or not data[rd.pos : rd.pos + 1].isspace():
            raise PnmError(f"missing whitespace after maxval at byte {rd.pos}")
        start = rd.pos + 1
        payload = data[start : start + n_values]
        if len(payload) < n_values:
            raise PnmError(
                f"truncated payload at byte {start + len(payload)}: "
                f"expected {n_values} bytes, got {len(payload)}"
            )
        flat = np.frombuffer(payload, dtype=np.uint8, count=n_values)
    else:
        values = np.empty(n_values, dtype=np.uint8)
        for i in range(n_values):
            at = rd.pos
            try:
                v = rd.next_int("pixel value")
            except PnmError:
                raise PnmError(f"truncated payload at byte {len(data)}: "
                               f"expected {n_values} values, got {i}") from None
            if not 0 <= v <= 255:
                raise PnmError(f"pixel value {v} out of range at byte {at}")
            values[i] = v
        flat = values

    if channels == 3:
        return flat.reshape(height, width, 3).copy()
    return flat.reshape(height, width).copy()


def write_pnm(img: np.ndarray) -> bytes:
    """Encode a grayscale or binary image as binary PGM (P5, maxval 255).

    Round-trips bit-exactly through read_pnm.
    """
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError(f"expected a 2-D grayscale array, got shape {img.shape}")
    if img.dtype != np.uint8:
        if np.issubdtype(img.dtype, np.integer) and img.min() >= 0 and img.max() <= 255:
            img = img.astype(np.uint8)
        else:
            raise ValueError("pixel values must be integers in [0, 255]")
    h, w = img.shape
    header = f"P5\n{w} {h}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(img).tobytes()
