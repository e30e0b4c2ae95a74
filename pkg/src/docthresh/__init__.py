"""docthresh: document-image binarization with pluggable statistics engines.

Global (Otsu) and locally adaptive (Niblack, Sauvola) thresholding where
the windowed mean/std can come from a naive full-window scan, integral
images, or a sparse geometric sampling mask — three engines with
bit-identical output and very different cost profiles.
"""

from .bench import (
    BenchReport,
    SyntheticSpec,
    gen_synthetic,
    memory_model,
    synthetic_corpus,
    time_engines,
)
from .estimators import LocalBinarizer, OtsuBinarizer
from .masks import STRUCTURES, SamplingMask, make_mask, mask_size, mask_to_ascii
from .metrics import EvalReport, SweepResult, evaluate, sweep
from .pnm import PnmError, read_pnm, to_gray, write_pnm
from .stats import (
    IntegralPair,
    WindowStats,
    build_integral,
    mean_std_integral,
    mean_std_naive,
    mean_std_sampled,
    window_stats_integral,
    window_stats_naive,
    window_stats_sampled,
)
from .threshold import (
    ENGINES,
    METHODS,
    BinarizationParams,
    apply_global,
    binarize,
    niblack_threshold_at,
    otsu_threshold,
    sauvola_threshold_at,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "BinarizationParams",
    "ENGINES",
    "EvalReport",
    "IntegralPair",
    "LocalBinarizer",
    "METHODS",
    "OtsuBinarizer",
    "PnmError",
    "STRUCTURES",
    "SamplingMask",
    "SweepResult",
    "SyntheticSpec",
    "WindowStats",
    "apply_global",
    "binarize",
    "build_integral",
    "evaluate",
    "gen_synthetic",
    "make_mask",
    "mask_size",
    "mask_to_ascii",
    "mean_std_integral",
    "mean_std_naive",
    "mean_std_sampled",
    "memory_model",
    "niblack_threshold_at",
    "otsu_threshold",
    "read_pnm",
    "sauvola_threshold_at",
    "sweep",
    "synthetic_corpus",
    "time_engines",
    "to_gray",
    "window_stats_integral",
    "window_stats_naive",
    "window_stats_sampled",
    "write_pnm",
]
