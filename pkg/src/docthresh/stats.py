"""Windowed mean and standard deviation via three interchangeable engines.

Engines
-------
naive     full-window scan; O(W²) work per pixel
integral  summed-area tables; O(1) work per pixel after an O(N²) build
sampled   mask-restricted scan; O(|mask|) = O(W) work per pixel

All engines clip the window (or mask) to the image bounds and normalize
by the number of in-bounds pixels actually used, and all report the
population standard deviation (divide by count, not count−1), so a
constant window always has std 0.

Every sum is an exact integer accumulated in int64 or float64 (both
exact well below 2⁵³ for 8-bit images), and all engines share one
finishing step (mean = Σx/n, std = √max(0, Σx²/n − mean²)), so their
mean/std outputs agree *bitwise*, not just within tolerance.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .masks import SamplingMask, make_mask
from .validation import as_gray_image, check_coords, check_window


class WindowStats(NamedTuple):
    mean: float
    std: float
    count: int  # pixels actually used after border clipping


class IntegralPair(NamedTuple):
    """Zero-padded (H+1)×(W+1) prefix-sum tables of x and x²."""

    sum_table: np.ndarray  # int64
    sqsum_table: np.ndarray  # int64


def _finish_scalar(total: int, total_sq: int, count: int) -> WindowStats:
    mean = total / count
    var = total_sq / count - mean * mean
    return WindowStats(mean, math.sqrt(max(var, 0.0)), count)


def _finish_arrays(total, total_sq, count):
    mean = total / count
    var = total_sq / count - mean * mean
    std = np.sqrt(np.maximum(var, 0.0))
    return mean, std


# ---------------------------------------------------------------- per pixel

def window_stats_naive(img, x: int, y: int, w: int) -> WindowStats:
    """Mean/std of the W×W window centered at (x, y), clipped to the image.

    Parameters
    ----------
    img : 2-D array of uint8
    x, y : int
        Column and row of the subject pixel.
    w : int
        Window size, odd and >= 3.
    """
    img = as_gray_image(img)
    w = check_window(w)
    check_coords(img, x, y)
    r = w // 2
    h, iw = img.shape
    patch = img[max(y - r, 0) : min(y + r, h - 1) + 1,
                max(x - r, 0) : min(x + r, iw - 1) + 1].astype(np.int64)
    total = int(patch.sum())
    total_sq = int((patch * patch).sum())
    return _finish_scalar(total, total_sq, patch.size)


def build_integral(img) -> IntegralPair:
    """Build the intensity and squared-intensity summed-area tables."""
    img = as_gray_image(img)
    h, w = img.shape
    a = img.astype(np.int64)
    s = np.zeros((h + 1, w + 1), dtype=np.int64)
    sq = np.zeros((h + 1, w + 1), dtype=np.int64)
    s[1:, 1:] = a.cumsum(axis=0).cumsum(axis=1)
    sq[1:, 1:] = (a * a).cumsum(axis=0).cumsum(axis=1)
    return IntegralPair(s, sq)


def _rect_sum(table: np.ndarray, y0: int, y1: int, x0: int, x1: int) -> int:
    return int(table[y1, x1] - table[y0, x1] - table[y1, x0] + table[y0, x0])


def window_stats_integral(ip: IntegralPair, x: int, y: int, w: int) -> WindowStats:
    """Same contract as window_stats_naive, answered from the integral tables."""
    w = check_window(w)
    h, iw = ip.sum_table.shape[0] - 1, ip.sum_table.shape[1] - 1
    if not (0 <= x < iw and 0 <= y < h):
        raise ValueError(f"coordinates ({x}, {y}) outside {iw}x{h} image")
    r = w // 2
    y0, y1 = max(y - r, 0), min(y + r, h - 1) + 1
    x0, x1 = max(x - r, 0), min(x + r, iw - 1) + 1
    total = _rect_sum(ip.sum_table, y0, y1, x0, x1)
    total_sq = _rect_sum(ip.sqsum_table, y0, y1, x0, x1)
    return _finish_scalar(total, total_sq, (y1 - y0) * (x1 - x0))


def window_stats_sampled(img, mask: SamplingMask, x: int, y: int) -> WindowStats:
    """Mean/std over the mask offsets that land inside the image at (x, y).

    The sample set is never empty because every mask contains (0, 0).
    """
    img = as_gray_image(img)
    check_coords(img, x, y)
    h, iw = img.shape
    total = total_sq = count = 0
    for dx, dy in mask.offsets:
        sx, sy = x + dx, y + dy
        if 0 <= sx < iw and 0 <= sy < h:
            v = int(img[sy, sx])
            total += v
            total_sq += v * v
            count += 1
    return _finish_scalar(total, total_sq, count)


# ---------------------------------------------------------------- full image

def _accumulate(img_f, img_sq, offsets):
    """Shift-and-accumulate Σx, Σx², and in-bounds counts for every pixel."""
    h, w = img_f.shape
    total = np.zeros((h, w))
    total_sq = np.zeros((h, w))
    count = np.zeros((h, w))
    for dx, dy in offsets:
        y0, y1 = max(0, -dy), min(h, h - dy)
        x0, x1 = max(0, -dx), min(w, w - dx)
        if y0 >= y1 or x0 >= x1:
            continue
        total[y0:y1, x0:x1] += img_f[y0 + dy : y1 + dy, x0 + dx : x1 + dx]
        total_sq[y0:y1, x0:x1] += img_sq[y0 + dy : y1 + dy, x0 + dx : x1 + dx]
        count[y0:y1, x0:x1] += 1.0
    return total, total_sq, count


def mean_std_sampled(img, mask: SamplingMask):
    """Per-pixel windowed mean/std over the mask's sample set, whole image.

    Returns
    -------
    mean, std : float64 arrays, same shape as img
    count : int64 array
        In-bounds sample count per pixel (>= 1 everywhere).
    """
    img = as_gray_image(img)
    img_f = img.astype(np.float64)
    total, total_sq, count = _accumulate(img_f, img_f * img_f, mask.offsets)
    mean, std = _finish_arrays(total, total_sq, count)
    return mean, std, count.astype(np.int64)


def mean_std_naive(img, w: int):
    """Full-window mean/std for every pixel (the FULL mask scanned directly)."""
    return mean_std_sampled(img, make_mask("full", w))


def mean_std_integral(img, w: int):
    """Integral-image mean/std for every pixel; builds both tables internally."""
    img = as_gray_image(img)
    w = check_window(w)
    ip = build_integral(img)
    h, iw = img.shape
    r = w // 2
    ys = np.arange(h)
    xs = np.arange(iw)
    y0 = np.maximum(ys - r, 0)
    y1 = np.minimum(ys + r, h - 1) + 1
    x0 = np.maximum(xs - r, 0)
    x1 = np.minimum(xs + r, iw - 1) + 1
    s, sq = ip.sum_table, ip.sqsum_table
    total = (s[np.ix_(y1, x1)] - s[np.ix_(y0, x1)]
             - s[np.ix_(y1, x0)] + s[np.ix_(y0, x0)]).astype(np.float64)
    total_sq = (sq[np.ix_(y1, x1)] - sq[np.ix_(y0, x1)]
                - sq[np.ix_(y1, x0)] + sq[np.ix_(y0, x0)]).astype(np.float64)
    count = np.outer(y1 - y0, x1 - x0)
    mean, std = _finish_arrays(total, total_sq, count.astype(np.float64))
    return mean, std, count.astype(np.int64)
