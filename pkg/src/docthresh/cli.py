"""Command-line interface: gray, binarize, eval, sweep, bench, mask-show.

Exit codes: 0 success, 1 usage error (bad flags/arguments), 2 I/O or
image-parse error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bench import SyntheticSpec, gen_synthetic, time_engines
from .masks import STRUCTURES, make_mask, mask_to_ascii
from .metrics import DEFAULT_K_GRID, DEFAULT_W_GRID, evaluate, sweep
from .pnm import PnmError, read_pnm, to_gray, write_pnm
from .threshold import ENGINES, METHODS, BinarizationParams, binarize


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_image(path: str) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_pnm(fh.read())


def _read_gray(path: str) -> np.ndarray:
    img = _read_image(path)
    return to_gray(img) if img.ndim == 3 else img


def _write_image(path: str, img: np.ndarray) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pnm(img))


def _usage(fn):
    """Re-tag parameter validation failures as usage errors (exit 1)."""
    try:
        return fn()
    except ValueError as e:
        raise _UsageError(str(e)) from None


def _int_list(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _cmd_gray(args) -> int:
    img = _read_image(args.input)
    _write_image(args.output, to_gray(img) if img.ndim == 3 else img)
    return 0


def _build_params(args) -> BinarizationParams:
    kwargs = {}
    if args.method == "niblack":
        kwargs["k_niblack"] = args.k if args.k is not None else -0.2
    elif args.k is not None:
        kwargs["k_sauvola"] = args.k
    return BinarizationParams(
        method=args.method, engine=args.engine, mask=args.mask,
        window=args.window, r=args.r, **kwargs,
    ).validate()


def _cmd_binarize(args) -> int:
    params = _usage(lambda: _build_params(args))
    img = _read_gray(args.input)
    binary, tmap = binarize(img, params)
    _write_image(args.output, binary)
    if args.threshold_map:
        dump = np.clip(np.floor(tmap + 0.5), 0, 255).astype(np.uint8)
        _write_image(args.threshold_map, dump)
    return 0


def _cmd_eval(args) -> int:
    pred = _read_gray(args.pred)
    gt = _read_gray(args.gt)
    print(evaluate(pred, gt).summary())
    return 0


def _cmd_sweep(args) -> int:
    img = _read_gray(args.input)
    gt = _read_gray(args.gt)
    result = sweep(
        img, gt, method=args.method, engine=args.engine, mask=args.mask,
        w_grid=args.w_grid, k_grid=args.k_grid, r=args.r,
    )
    with open(args.out, "w") as fh:
        fh.write(result.to_csv())
    b = result.best
    print(f"best: W={b.w} k={b.k:g} FM={b.f_measure * 100:.2f}%")
    return 0


def _cmd_bench(args) -> int:
    if args.image:
        img = _read_gray(args.image)
    else:
        img, _ = gen_synthetic(SyntheticSpec(width=args.width, height=args.height))
    report = _usage(lambda: time_engines(
        img, method=args.method, w_list=args.w_list, repetitions=args.reps,
        mask=args.mask, measure_memory=args.measure_memory,
    ))
    with open(args.out, "w") as fh:
        fh.write(report.to_csv())
    print(report.summary())
    return 0


def _cmd_mask_show(args) -> int:
    mask = _usage(lambda: make_mask(args.structure, args.window))
    print(mask_to_ascii(mask))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="docthresh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", metavar="command")

    p = sub.add_parser("gray", help="convert a PPM/PGM image to grayscale PGM")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=_cmd_gray)

    p = sub.add_parser("binarize", help="binarize a grayscale image")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--method", choices=METHODS, default="sauvola")
    p.add_argument("--engine", choices=ENGINES, default="sampled")
    p.add_argument("--mask", choices=STRUCTURES, default="gs3")
    p.add_argument("--window", type=int, default=21)
    p.add_argument("--k", type=float, default=None,
                   help="method coefficient (default 0.34 sauvola, -0.2 niblack)")
    p.add_argument("--r", type=float, default=128.0)
    p.add_argument("--threshold-map", metavar="PATH",
                   help="also dump round(t) per pixel as a PGM")
    p.set_defaults(func=_cmd_binarize)

    p = sub.add_parser("eval", help="score a binarization against ground truth")
    p.add_argument("--pred", required=True)
    p.add_argument("--gt", required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="grid-search (W, k), write CSV, print best")
    p.add_argument("input")
    p.add_argument("--gt", required=True)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--method", choices=METHODS, default="sauvola")
    p.add_argument("--engine", choices=ENGINES, default="sampled")
    p.add_argument("--mask", choices=STRUCTURES, default="gs3")
    p.add_argument("--w-grid", type=_int_list, default=list(DEFAULT_W_GRID))
    p.add_argument("--k-grid", type=_float_list, default=list(DEFAULT_K_GRID))
    p.add_argument("--r", type=float, default=128.0)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bench", help="time the engines, write CSV report")
    p.add_argument("out", help="CSV output path")
    p.add_argument("--image", help="grayscale PGM to benchmark on (default: synthetic)")
    p.add_argument("--width", type=int, default=1024)
    p.add_argument("--height", type=int, default=768)
    p.add_argument("--method", choices=("niblack", "sauvola"), default="sauvola")
    p.add_argument("--w-list", type=_int_list, default=[11, 21, 41, 81])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--mask", choices=STRUCTURES, default="gs3")
    p.add_argument("--measure-memory", action="store_true")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("mask-show", help="print a sampling mask as ASCII art")
    p.add_argument("structure")
    p.add_argument("window", type=int)
    p.set_defaults(func=_cmd_mask_show)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"docthresh: {e}", file=sys.stderr)
        return 1
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"docthresh: {e}", file=sys.stderr)
        return 1
    except PnmError as e:
        print(f"docthresh: parse error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"docthresh: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"docthresh: invalid input: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
