"""Global (Otsu) and locally adaptive (Niblack, Sauvola) binarization.

Output polarity is fixed: 0 = foreground (ink), 255 = background. The
threshold comparison is strict — a pixel exactly equal to its threshold
is background — and thresholds are kept real-valued, never rounded,
so that engines can be compared bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .masks import STRUCTURES, make_mask
from .stats import mean_std_integral, mean_std_naive, mean_std_sampled
from .validation import as_gray_image, check_window

METHODS = ("otsu", "niblack", "sauvola")
ENGINES = ("naive", "integral", "sampled")


@dataclass(frozen=True)
class BinarizationParams:
    """Method/engine selection plus the knobs they read.

    k_sauvola must be positive; k_niblack is typically negative; r is the
    dynamic range of the standard deviation (128 covers 8-bit images).
    The mask is consulted only by the sampled engine.
    """

    method: str = "sauvola"
    engine: str = "sampled"
    mask: str = "gs3"
    window: int = 21
    k_sauvola: float = 0.34
    k_niblack: float = -0.2
    r: float = 128.0

    def validate(self) -> "BinarizationParams":
        if self.method not in METHODS:
            raise ValueError(f"method: expected one of {METHODS}, got {self.method!r}")
        if self.engine not in ENGINES:
            raise ValueError(f"engine: expected one of {ENGINES}, got {self.engine!r}")
        check_window(self.window)
        if not self.k_sauvola > 0:
            raise ValueError(f"k_sauvola: must be > 0, got {self.k_sauvola}")
        if not self.r > 0:
            raise ValueError(f"r: must be > 0, got {self.r}")
        if self.engine == "sampled" and self.mask not in STRUCTURES:
            raise ValueError(f"mask: expected one of {STRUCTURES}, got {self.mask!r}")
        return self


def otsu_threshold(img) -> int:
    """Global threshold maximizing between-class variance of the histogram.

    Returns T with the strict convention of apply_global: pixels < T become
    foreground. Ties are broken toward the smallest T; a constant image
    yields its own value.
    """
    img = as_gray_image(img)
    hist = np.bincount(img.ravel(), minlength=256).astype(np.int64)
    total = int(hist.sum())
    sum_all = int(np.dot(hist, np.arange(256, dtype=np.int64)))

    best_t = -1
    best_var = -1.0
    wb = 0  # class-0 weight: pixels <= t
    sumb = 0
    for t in range(256):
        wb += int(hist[t])
        sumb += t * int(hist[t])
        if wb == 0:
            continue
        wf = total - wb
        if wf == 0:
            break
        mb = sumb / wb
        mf = (sum_all - sumb) / wf
        var = wb * wf * (mb - mf) ** 2
        if var > best_var:
            best_var = var
            best_t = t
    if best_t < 0:
        # single-bin histogram: no split has positive variance
        return int(img.flat[0])
    return best_t + 1  # class 0 was {v <= t}; strict `< T` needs T = t+1


def apply_global(img, t: int) -> np.ndarray:
    """Binarize with one threshold: pixel < t -> 0, else 255."""
    img = as_gray_image(img)
    if not isinstance(t, (int, np.integer)) or not 0 <= int(t) <= 255:
        raise ValueError(f"threshold: expected an integer in [0, 255], got {t!r}")
    return np.where(img < int(t), 0, 255).astype(np.uint8)


def sauvola_threshold_at(stats, k: float, r: float) -> float:
    """t = m·(1 + k·(s/r − 1)) for one pixel's window statistics."""
    if not k > 0:
        raise ValueError(f"k: must be > 0, got {k}")
    if not r > 0:
        raise ValueError(f"r: must be > 0, got {r}")
    return stats.mean * (1.0 + k * (stats.std / r - 1.0))


def niblack_threshold_at(stats, k: float) -> float:
    """t = m + k·s for one pixel's window statistics."""
    return stats.mean + k * stats.std


def _mean_std(img, params: BinarizationParams):
    if params.engine == "naive":
        return mean_std_naive(img, params.window)
    if params.engine == "integral":
        return mean_std_integral(img, params.window)
    return mean_std_sampled(img, make_mask(params.mask, params.window))


def binarize(img, params: BinarizationParams = BinarizationParams()):
    """Binarize a grayscale image.

    Parameters
    ----------
    img : 2-D array of uint8
    params : BinarizationParams

    Returns
    -------
    binary : 2-D uint8 array over {0, 255}, 0 = foreground
    tmap : 2-D float64 array
        The per-pixel threshold actually applied (constant for otsu).
    """
    img = as_gray_image(img)
    params.validate()
    if params.method == "otsu":
        t = otsu_threshold(img)
        tmap = np.full(img.shape, float(t))
        return apply_global(img, t), tmap

    mean, std, _ = _mean_std(img, params)
    if params.method == "sauvola":
        tmap = mean * (1.0 + params.k_sauvola * (std / params.r - 1.0))
    else:
        tmap = mean + params.k_niblack * std
    binary = np.where(img.astype(np.float64) < tmap, 0, 255).astype(np.uint8)
    return binary, tmap
