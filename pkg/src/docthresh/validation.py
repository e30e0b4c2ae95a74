"""Input validation helpers shared across the toolkit."""

from __future__ import annotations

import numpy as np


def as_gray_image(img) -> np.ndarray:
    """Validate and return a 2-D uint8 grayscale image.

    Accepts any array-like of integers in [0, 255]; rejects empty arrays,
    wrong dimensionality, and out-of-range or non-integer values.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D grayscale image, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("image is empty")
    if arr.dtype == np.uint8:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        if np.issubdtype(arr.dtype, np.floating) and np.all(arr == np.floor(arr)):
            arr = arr.astype(np.int64)
        else:
            raise ValueError(f"pixel values must be integers, got dtype {arr.dtype}")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError("pixel values must lie in [0, 255]")
    return arr.astype(np.uint8)


def as_binary_image(img) -> np.ndarray:
    """Validate a bi-level image: every pixel must be 0 or 255."""
    arr = as_gray_image(img)
    bad = (arr != 0) & (arr != 255)
    if bad.any():
        y, x = np.argwhere(bad)[0]
        raise ValueError(
            f"not a bi-level image: pixel ({x}, {y}) has value {arr[y, x]}, expected 0 or 255"
        )
    return arr


def check_window(w) -> int:
    """Validate a window size: odd integer >= 3."""
    if not isinstance(w, (int, np.integer)) or isinstance(w, bool):
        raise ValueError(f"window: expected an integer, got {w!r}")
    w = int(w)
    if w < 3 or w % 2 == 0:
        raise ValueError(f"window: must be an odd integer >= 3, got {w}")
    return w


def check_coords(img: np.ndarray, x: int, y: int) -> None:
    """Validate that (x, y) = (column, row) lies inside the image."""
    h, w = img.shape[:2]
    if not (0 <= x < w and 0 <= y < h):
        raise ValueError(f"coordinates ({x}, {y}) outside {w}x{h} image")
