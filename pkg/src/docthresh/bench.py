"""Benchmark harness: synthetic documents, wall-clock scaling, memory model.

Timing covers full-image binarization per engine (including integral-table
construction for the integral engine, which is that engine's whole point of
overhead) and excludes file I/O. Wall times are medians over repetitions.

The memory model is normative arithmetic, not a measurement: a working
image copy plus the output costs 2·Sz for the naive and sampled engines,
while the integral engine adds a 4-byte-per-pixel intensity table and an
8-byte-per-pixel squared-intensity table on top, 12·Sz in total. Measured
peak allocation (tracemalloc) can be attached as advisory data.
"""

from __future__ import annotations

import time
import tracemalloc
from dataclasses import dataclass
from statistics import median
from typing import NamedTuple, Sequence

import numpy as np

from .threshold import ENGINES, BinarizationParams, binarize
from .validation import as_gray_image

# synthetic-document layout: margins before the first stroke, and the
# illumination ramp's flat/rise split along x (fractions of the width)
STROKE_MARGIN = 8
RAMP_FLAT_FRAC = 0.45
RAMP_RISE_FRAC = 0.10

_MODEL_FACTOR = {"naive": 2, "integral": 12, "sampled": 2}


@dataclass(frozen=True)
class SyntheticSpec:
    """Deterministic document-like test image: dark strokes on a lighter
    background, an additive illumination ramp along x, and seeded noise."""

    width: int = 256
    height: int = 256
    stroke_value: int = 40
    background_value: int = 200
    illumination_gradient: int = 40
    noise_amplitude: int = 5
    noise_seed: int = 0
    stroke_period: int = 128
    stroke_thickness: int = 1

    def validate(self) -> "SyntheticSpec":
        if self.width < 16 or self.height < 16:
            raise ValueError(f"image too small: {self.width}x{self.height}")
        for name in ("stroke_value", "background_value"):
            v = getattr(self, name)
            if not 0 <= v <= 255:
                raise ValueError(f"{name}: must be in [0, 255], got {v}")
        if self.illumination_gradient < 0 or self.noise_amplitude < 0:
            raise ValueError("illumination_gradient and noise_amplitude must be >= 0")
        if self.stroke_period < 2 or self.stroke_thickness < 1:
            raise ValueError("stroke_period must be >= 2 and stroke_thickness >= 1")
        return self


def _stroke_mask(spec: SyntheticSpec) -> np.ndarray:
    """Horizontal rules every stroke_period rows plus one vertical rule."""
    h, w, th = spec.height, spec.width, spec.stroke_thickness
    mask = np.zeros((h, w), dtype=bool)
    for y in range(STROKE_MARGIN, h - STROKE_MARGIN, spec.stroke_period):
        mask[y : y + th, :] = True
    x = (2 * w) // 3
    mask[:, x : x + th] = True
    return mask


def _ramp(spec: SyntheticSpec) -> np.ndarray:
    """Additive illumination profile along x: flat 0, linear rise, flat top."""
    w = spec.width
    x0 = int(RAMP_FLAT_FRAC * w)
    x1 = max(int((RAMP_FLAT_FRAC + RAMP_RISE_FRAC) * w), x0 + 1)
    xs = np.arange(w, dtype=np.float64)
    frac = np.clip((xs - x0) / (x1 - x0), 0.0, 1.0)
    return np.floor(frac * spec.illumination_gradient + 0.5)


def gen_synthetic(spec: SyntheticSpec = SyntheticSpec()):
    """Generate (image, ground truth) for a spec; identical for equal specs.

    Ground truth marks the stroke cells as foreground (0) on background 255.
    """
    spec.validate()
    strokes = _stroke_mask(spec)
    img = np.where(strokes, float(spec.stroke_value), float(spec.background_value))
    img = img + _ramp(spec)[np.newaxis, :]
    if spec.noise_amplitude:
        rng = np.random.default_rng(spec.noise_seed)
        img = img + rng.integers(
            -spec.noise_amplitude, spec.noise_amplitude + 1, size=img.shape
        )
    img = np.clip(img, 0, 255).astype(np.uint8)
    gt = np.where(strokes, 0, 255).astype(np.uint8)
    return img, gt


def synthetic_corpus(count: int = 10, **overrides):
    """`count` deterministic (image, gt) pairs differing only by noise seed."""
    return [
        gen_synthetic(SyntheticSpec(noise_seed=seed, **overrides))
        for seed in range(count)
    ]


class BenchRow(NamedTuple):
    engine: str
    method: str
    n: int  # total pixel count
    w: int
    reps: int
    median_s: float
    speedup: float  # naive median / this engine's median, same (method, n, w)


class MemoryRow(NamedTuple):
    engine: str
    image_bytes: int
    model_bytes: int
    measured_peak_bytes: int | None


@dataclass(frozen=True)
class BenchReport:
    rows: tuple
    memory: tuple

    def to_csv(self) -> str:
        lines = ["engine,method,n,w,reps,median_s,speedup"]
        lines += [
            f"{r.engine},{r.method},{r.n},{r.w},{r.reps},{r.median_s:.6f},{r.speedup:.3f}"
            for r in self.rows
        ]
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        lines = ["engine    method   n        w   reps  median_s   speedup"]
        for r in self.rows:
            lines.append(
                f"{r.engine:<9} {r.method:<8} {r.n:<8} {r.w:<3} {r.reps:<5} "
                f"{r.median_s:<10.4f} {r.speedup:.2f}x"
            )
        lines.append("")
        lines.append("engine    Sz          model       measured_peak")
        for m in self.memory:
            measured = "-" if m.measured_peak_bytes is None else str(m.measured_peak_bytes)
            lines.append(f"{m.engine:<9} {m.image_bytes:<11} {m.model_bytes:<11} {measured}")
        return "\n".join(lines)


def memory_model(engine: str, sz: int) -> int:
    """Byte cost model per engine for an Sz-byte image (constants dropped)."""
    if engine not in _MODEL_FACTOR:
        raise ValueError(f"engine: expected one of {ENGINES}, got {engine!r}")
    if sz <= 0:
        raise ValueError(f"Sz: must be > 0, got {sz}")
    return _MODEL_FACTOR[engine] * sz


def _params(method: str, engine: str, w: int, mask: str) -> BinarizationParams:
    return BinarizationParams(method=method, engine=engine, mask=mask, window=w)


def time_engines(
    img,
    method: str = "sauvola",
    w_list: Sequence[int] = (11, 21, 41, 81),
    repetitions: int = 5,
    mask: str = "gs3",
    engines: Sequence[str] = ENGINES,
    measure_memory: bool = False,
) -> BenchReport:
    """Median wall time of full-image binarization per engine and window size.

    Results during timing are discarded, not reused, so timed runs cannot
    contaminate outputs. Peak-allocation measurement is opt-in because
    tracemalloc slows the very thing being timed (it runs as a separate,
    untimed pass at the smallest window).
    """
    img = as_gray_image(img)
    if repetitions < 3:
        raise ValueError(f"repetitions: must be >= 3, got {repetitions}")
    if not w_list:
        raise ValueError("w_list must be non-empty")

    ws = sorted(int(w) for w in w_list)
    n = img.size
    medians = {}
    for engine in engines:
        for w in ws:
            params = _params(method, engine, w, mask)
            times = []
            for _ in range(repetitions):
                t0 = time.perf_counter()
                binarize(img, params)
                times.append(time.perf_counter() - t0)
            medians[engine, w] = median(times)

    rows = tuple(
        BenchRow(
            engine, method, n, w, repetitions, medians[engine, w],
            medians.get(("naive", w), medians[engine, w]) / medians[engine, w],
        )
        for engine in engines
        for w in ws
    )

    memory = []
    for engine in engines:
        peak = None
        if measure_memory:
            params = _params(method, engine, ws[0], mask)
            tracemalloc.start()
            binarize(img, params)
            _, peak = tracemalloc.get_traced_memory()
            tracemalloc.stop()
        memory.append(MemoryRow(engine, n, memory_model(engine, n), peak))
    return BenchReport(rows, tuple(memory))
