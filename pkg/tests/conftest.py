import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_gray(rng, h=None, w=None, lo=8, hi=64):
    """A uniform-random uint8 image with random size in [lo, hi]."""
    if h is None:
        h = int(rng.integers(lo, hi + 1))
    if w is None:
        w = int(rng.integers(lo, hi + 1))
    return rng.integers(0, 256, size=(h, w)).astype(np.uint8)
