"""Foreground-pixel scoring (recall / precision / F-measure) and (W, k) sweeps.

The positive class is the foreground, pixel value 0. Degenerate
denominators score 0 rather than NaN so that sweeps can rank every cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .masks import make_mask
from .stats import mean_std_integral, mean_std_naive, mean_std_sampled
from .threshold import BinarizationParams, apply_global, otsu_threshold
from .validation import as_binary_image, as_gray_image

DEFAULT_W_GRID = (11, 15, 21, 31, 41)
DEFAULT_K_GRID = (0.1, 0.2, 0.3, 0.34, 0.4, 0.5)


@dataclass(frozen=True)
class EvalReport:
    tp: int
    tn: int
    fp: int
    fn: int
    recall: float
    precision: float
    f_measure: float

    def summary(self) -> str:
        return (
            f"TP = {self.tp}  TN = {self.tn}  FP = {self.fp}  FN = {self.fn}\n"
            f"R = {self.recall * 100:.2f}%\n"
            f"P = {self.precision * 100:.2f}%\n"
            f"FM = {self.f_measure * 100:.2f}%"
        )


def evaluate(pred, gt) -> EvalReport:
    """Score a predicted bi-level image against ground truth.

    Foreground (value 0) is the positive class. R = TP/(TP+FN),
    P = TP/(TP+FP), FM = 2RP/(R+P); any zero denominator yields 0.0.
    """
    pred = as_binary_image(pred)
    gt = as_binary_image(gt)
    if pred.shape != gt.shape:
        raise ValueError(f"shape mismatch: pred {pred.shape} vs gt {gt.shape}")
    pred_fg = pred == 0
    gt_fg = gt == 0
    tp = int(np.count_nonzero(pred_fg & gt_fg))
    fp = int(np.count_nonzero(pred_fg & ~gt_fg))
    fn = int(np.count_nonzero(~pred_fg & gt_fg))
    tn = pred.size - tp - fp - fn
    recall = tp / (tp + fn) if tp + fn else 0.0
    precision = tp / (tp + fp) if tp + fp else 0.0
    fm = 2 * recall * precision / (recall + precision) if recall + precision else 0.0
    return EvalReport(tp, tn, fp, fn, recall, precision, fm)


class SweepCell(NamedTuple):
    w: int
    k: float
    f_measure: float


@dataclass(frozen=True)
class SweepResult:
    """Full (W, k) grid of F-measures plus the winning cell."""

    cells: tuple
    best: SweepCell

    def to_csv(self) -> str:
        lines = ["w,k,f_measure"]
        lines += [f"{c.w},{c.k:g},{c.f_measure:.6f}" for c in self.cells]
        return "\n".join(lines) + "\n"


def sweep(
    img,
    gt,
    method: str = "sauvola",
    engine: str = "sampled",
    mask: str = "gs3",
    w_grid: Sequence[int] = DEFAULT_W_GRID,
    k_grid: Sequence[float] = DEFAULT_K_GRID,
    r: float = 128.0,
) -> SweepResult:
    """Exhaustively score every (W, k) combination; no early stopping.

    Window statistics are computed once per W and reused across the k
    grid. The best cell maximizes FM; ties go to smaller W, then smaller
    k (grids are scanned in ascending order).
    """
    img = as_gray_image(img)
    gt = as_binary_image(gt)
    if img.shape != gt.shape:
        raise ValueError(f"shape mismatch: img {img.shape} vs gt {gt.shape}")
    if not w_grid or not k_grid:
        raise ValueError("w_grid and k_grid must be non-empty")

    ws = sorted(int(w) for w in w_grid)
    ks = sorted(float(k) for k in k_grid)
    img_f = img.astype(np.float64)

    if method == "otsu":
        fm = evaluate(apply_global(img, otsu_threshold(img)), gt).f_measure
        cells = tuple(SweepCell(w, k, fm) for w in ws for k in ks)
        return SweepResult(cells, cells[0])

    cells = []
    best = None
    for w in ws:
        for k in ks:
            _cell_params(method, engine, mask, w, k)  # fail fast, naming the cell
        if engine == "naive":
            mean, std, _ = mean_std_naive(img, w)
        elif engine == "integral":
            mean, std, _ = mean_std_integral(img, w)
        else:
            mean, std, _ = mean_std_sampled(img, make_mask(mask, w))
        for k in ks:
            if method == "sauvola":
                tmap = mean * (1.0 + k * (std / r - 1.0))
            else:
                tmap = mean + k * std
            pred = np.where(img_f < tmap, 0, 255).astype(np.uint8)
            cell = SweepCell(w, k, evaluate(pred, gt).f_measure)
            cells.append(cell)
            if best is None or cell.f_measure > best.f_measure:
                best = cell
    return SweepResult(tuple(cells), best)


def _cell_params(method, engine, mask, w, k) -> BinarizationParams:
    kwargs = {"k_sauvola": k} if method == "sauvola" else {"k_niblack": k}
    try:
        return BinarizationParams(
            method=method, engine=engine, mask=mask, window=w, **kwargs
        ).validate()
    except ValueError as e:
        raise ValueError(f"sweep cell (W={w}, k={k}): {e}") from None
