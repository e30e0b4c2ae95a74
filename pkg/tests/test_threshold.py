import numpy as np
import pytest

from docthresh import (
    BinarizationParams,
    WindowStats,
    apply_global,
    binarize,
    make_mask,
    mean_std_sampled,
    niblack_threshold_at,
    otsu_threshold,
    sauvola_threshold_at,
)
from conftest import random_gray


def brute_force_otsu(img):
    """Exact-rational argmax of between-class variance; smallest tie wins.

    Candidate T means class 0 = {v < T}. Variances are compared as exact
    fractions (Python integers), so no float rounding is involved.
    """
    hist = np.bincount(np.asarray(img).ravel(), minlength=256)
    total = int(hist.sum())
    total_sum = int(np.dot(hist, np.arange(256)))
    best_t, best_num, best_den = None, -1, 1
    wb = sumb = 0
    for t in range(1, 256):
        wb += int(hist[t - 1])
        sumb += (t - 1) * int(hist[t - 1])
        wf = total - wb
        if wb == 0 or wf == 0:
            continue
        # var = (sumb*wf - sumf*wb)^2 / (wb*wf), all integers
        num = (sumb * wf - (total_sum - sumb) * wb) ** 2
        den = wb * wf
        if num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den
    return best_t


def test_otsu_two_populations():
    img = np.array([[10] * 50 + [200] * 50], dtype=np.uint8)
    t = otsu_threshold(img)
    assert 10 < t <= 200
    assert t == 11  # smallest of the tied maximizers
    binary = apply_global(img, t)
    assert (binary[img == 10] == 0).all()
    assert (binary[img == 200] == 255).all()


def test_otsu_constant_image():
    assert otsu_threshold(np.full((4, 7), 77, dtype=np.uint8)) == 77
    assert otsu_threshold(np.zeros((2, 2), dtype=np.uint8)) == 0


def test_otsu_two_extremes_tie():
    # every split between 0 and 255 ties; the smallest wins
    assert otsu_threshold(np.array([[0, 255]], dtype=np.uint8)) == 1


def test_otsu_bimodal_matches_brute_force(rng):
    low = rng.integers(50, 71, size=2048)
    high = rng.integers(180, 201, size=2048)
    img = np.concatenate([low, high]).astype(np.uint8).reshape(64, 64)
    assert otsu_threshold(img) == brute_force_otsu(img)


def test_otsu_random_images_match_brute_force(rng):
    for _ in range(50):
        img = random_gray(rng)
        assert otsu_threshold(img) == brute_force_otsu(img)


def test_otsu_skewed_histograms(rng):
    # heavily skewed: a few dark pixels on a bright field
    img = np.full((32, 32), 230, dtype=np.uint8)
    img[:2, :3] = 15
    assert otsu_threshold(img) == brute_force_otsu(img)


def test_apply_global_boundaries():
    img = np.array([[0, 100, 254, 255]], dtype=np.uint8)
    assert (apply_global(img, 0) == 255).all()  # nothing is < 0
    b = apply_global(img, 255)
    assert b.tolist() == [[0, 0, 0, 255]]


def test_apply_global_strictness():
    img = np.array([[100]], dtype=np.uint8)
    assert apply_global(img, 101)[0, 0] == 0
    assert apply_global(img, 100)[0, 0] == 255  # equal -> background


def test_apply_global_rejects_bad_threshold():
    img = np.zeros((2, 2), dtype=np.uint8)
    with pytest.raises(ValueError, match="threshold"):
        apply_global(img, 256)
    with pytest.raises(ValueError, match="threshold"):
        apply_global(img, -1)
    with pytest.raises(ValueError, match="threshold"):
        apply_global(img, 10.5)


def test_sauvola_spot_values():
    assert sauvola_threshold_at(WindowStats(100.0, 0.0, 9), 0.5, 128.0) == 50.0
    assert sauvola_threshold_at(WindowStats(0.0, 30.0, 9), 0.34, 128.0) == 0.0
    assert sauvola_threshold_at(WindowStats(128.0, 128.0, 9), 0.34, 128.0) == 128.0


def test_sauvola_rejects_bad_params():
    st = WindowStats(100.0, 10.0, 9)
    with pytest.raises(ValueError, match="k"):
        sauvola_threshold_at(st, 0.0, 128.0)
    with pytest.raises(ValueError, match="r"):
        sauvola_threshold_at(st, 0.3, 0.0)


def test_niblack_spot_values():
    assert niblack_threshold_at(WindowStats(100.0, 20.0, 9), -0.2) == 96.0
    assert niblack_threshold_at(WindowStats(123.0, 0.0, 9), -5.0) == 123.0
    assert niblack_threshold_at(WindowStats(123.0, 50.0, 9), 0.0) == 123.0


def test_binarize_output_is_bilevel(rng):
    img = random_gray(rng)
    for method in ("otsu", "niblack", "sauvola"):
        binary, tmap = binarize(img, BinarizationParams(method=method, window=5))
        assert binary.dtype == np.uint8
        assert set(np.unique(binary)) <= {0, 255}
        assert tmap.shape == img.shape


def test_binarize_constant_image_is_all_background():
    img = np.full((9, 9), 120, dtype=np.uint8)
    for engine in ("naive", "integral", "sampled"):
        p = BinarizationParams(method="sauvola", engine=engine, window=5)
        binary, tmap = binarize(img, p)
        assert (binary == 255).all()  # t = v(1-k) < v everywhere
        assert (tmap < 120).all()
    # niblack on a constant image: t = m = v, strict < keeps background
    binary, _ = binarize(img, BinarizationParams(method="niblack", window=5))
    assert (binary == 255).all()


def test_binarize_engines_bit_identical(rng):
    for _ in range(8):
        img = random_gray(rng)
        win = int(rng.choice([3, 5, 9, 21]))
        for method in ("sauvola", "niblack"):
            outs = []
            for engine in ("naive", "integral", "sampled"):
                p = BinarizationParams(method=method, engine=engine,
                                       mask="full", window=win)
                binary, tmap = binarize(img, p)
                outs.append((binary, tmap))
            for binary, tmap in outs[1:]:
                assert np.array_equal(binary, outs[0][0])
                assert (tmap == outs[0][1]).all()


def test_binarize_threshold_map_matches_formula(rng):
    img = random_gray(rng)
    p = BinarizationParams(method="sauvola", engine="sampled", mask="gs3",
                           window=9, k_sauvola=0.4, r=100.0)
    binary, tmap = binarize(img, p)
    mean, std, _ = mean_std_sampled(img, make_mask("gs3", 9))
    assert (tmap == mean * (1.0 + 0.4 * (std / 100.0 - 1.0))).all()
    assert np.array_equal(binary == 0, img.astype(float) < tmap)


def test_binarize_otsu_path(rng):
    img = random_gray(rng)
    binary, tmap = binarize(img, BinarizationParams(method="otsu"))
    t = otsu_threshold(img)
    assert (tmap == float(t)).all()
    assert np.array_equal(binary, apply_global(img, t))


def test_sauvola_k_monotonicity():
    from docthresh import gen_synthetic

    img, _ = gen_synthetic()
    prev_fg = None
    for k in (0.1, 0.2, 0.34, 0.5):
        p = BinarizationParams(method="sauvola", engine="naive", window=21,
                               k_sauvola=k)
        binary, _ = binarize(img, p)
        fg = binary == 0
        if prev_fg is not None:
            assert (fg <= prev_fg).all()  # foreground never grows as k rises
        prev_fg = fg


def test_binarize_deterministic(rng):
    img = random_gray(rng)
    p = BinarizationParams()
    a, ta = binarize(img, p)
    b, tb = binarize(img, p)
    assert np.array_equal(a, b)
    assert (ta == tb).all()


def test_params_validation_names_field():
    img = np.zeros((5, 5), dtype=np.uint8)
    cases = [
        (BinarizationParams(method="bogus"), "method"),
        (BinarizationParams(engine="gpu"), "engine"),
        (BinarizationParams(window=8), "window"),
        (BinarizationParams(k_sauvola=-0.1), "k_sauvola"),
        (BinarizationParams(r=0.0), "r"),
        (BinarizationParams(engine="sampled", mask="nope"), "mask"),
    ]
    for params, field in cases:
        with pytest.raises(ValueError, match=field):
            binarize(img, params)
