"""Sampling masks: fixed geometric pixel-selection patterns within a window.

A mask picks a small, regular subset of a W×W window so that windowed
statistics cost O(W) per pixel instead of O(W²). Six structures are
provided plus FULL (every window pixel, for equivalence testing):

    gs1   axis-aligned cross (center row + center column)   2W−1 px
    gs2   X (both main diagonals)                           2W−1 px
    gs3   8-ray star (cross ∪ X)                            4W−3 px
    gs4   center row + both diagonals                       3W−2 px
    gs5   window perimeter ring + center                    4W−3 px
    gs6   cross ∪ perimeter ring                            6W−9 px
    full  the whole window                                  W² px

Offsets are window-relative (dx, dy) pairs with the subject pixel at
(0, 0); border clipping is the statistics engines' job, not the mask's.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .validation import check_window

STRUCTURES = ("gs1", "gs2", "gs3", "gs4", "gs5", "gs6", "full")


def _in_cross(dx: int, dy: int, r: int) -> bool:
    return dx == 0 or dy == 0


def _in_x(dx: int, dy: int, r: int) -> bool:
    return dx == dy or dx == -dy


def _in_star(dx: int, dy: int, r: int) -> bool:
    return _in_cross(dx, dy, r) or _in_x(dx, dy, r)


def _in_row_diag(dx: int, dy: int, r: int) -> bool:
    return dy == 0 or _in_x(dx, dy, r)


def _in_ring_center(dx: int, dy: int, r: int) -> bool:
    return max(abs(dx), abs(dy)) == r or (dx == 0 and dy == 0)


def _in_cross_ring(dx: int, dy: int, r: int) -> bool:
    return _in_cross(dx, dy, r) or max(abs(dx), abs(dy)) == r


def _in_full(dx: int, dy: int, r: int) -> bool:
    return True


_PREDICATES = {
    "gs1": _in_cross,
    "gs2": _in_x,
    "gs3": _in_star,
    "gs4": _in_row_diag,
    "gs5": _in_ring_center,
    "gs6": _in_cross_ring,
    "full": _in_full,
}


def _canonical(structure: str) -> str:
    name = str(structure).lower().replace("-", "").replace("_", "")
    if name not in _PREDICATES:
        raise ValueError(
            f"unknown mask structure {structure!r}; expected one of {', '.join(STRUCTURES)}"
        )
    return name


@dataclass(frozen=True)
class SamplingMask:
    """An immutable set of window-relative offsets.

    Attributes
    ----------
    structure : str
        Canonical structure name ("gs1".."gs6" or "full").
    window : int
        Window size W (odd, >= 3).
    offsets : tuple of (dx, dy)
        Unique in-window offsets in row-major order; always contains (0, 0).
    """

    structure: str
    window: int
    offsets: tuple = field(repr=False)

    def __len__(self) -> int:
        return len(self.offsets)


def make_mask(structure: str, w: int) -> SamplingMask:
    """Build the sampling mask for `structure` over a W×W window.

    Offsets are enumerated row-major (dy outer, dx inner), so FULL yields
    the exact scan order of a naive full-window pass.
    """
    name = _canonical(structure)
    w = check_window(w)
    r = w // 2
    pred = _PREDICATES[name]
    offsets = tuple(
        (dx, dy)
        for dy in range(-r, r + 1)
        for dx in range(-r, r + 1)
        if pred(dx, dy, r)
    )
    return SamplingMask(structure=name, window=w, offsets=offsets)


def mask_size(structure: str, w: int) -> int:
    """Number of offsets in the mask for (structure, W)."""
    return len(make_mask(structure, w).offsets)


def mask_to_ascii(mask: SamplingMask) -> str:
    """Render a mask as W rows of '.'/'#' (sampled cells are '#')."""
    r = mask.window // 2
    cells = set(mask.offsets)
    rows = []
    for dy in range(-r, r + 1):
        rows.append("".join("#" if (dx, dy) in cells else "." for dx in range(-r, r + 1)))
    return "\n".join(rows)
