import numpy as np
import pytest

from docthresh import PnmError, read_pnm, to_gray, write_pnm


def test_to_gray_weights_sum_to_one():
    # equal channels must map to themselves for every level
    levels = np.arange(256, dtype=np.uint8)
    img = np.stack([levels, levels, levels], axis=-1).reshape(1, 256, 3)
    assert np.array_equal(to_gray(img)[0], levels)


def test_to_gray_spot_values():
    px = lambda r, g, b: to_gray(np.array([[[r, g, b]]], dtype=np.uint8))[0, 0]
    assert px(255, 255, 255) == 255
    assert px(100, 100, 100) == 100
    # 0.299*255 = 76.245 -> 76 (round half-up)
    assert px(255, 0, 0) == 76
    assert px(0, 255, 0) == 150  # 0.587*255 = 149.685
    assert px(0, 0, 255) == 29   # 0.114*255 = 29.07


def test_to_gray_rounds_half_up():
    # 0.299*250 + 0.587*0 + 0.114*100 = 74.75 + 11.4 = 86.15 -> 86
    # craft an exact .5: 0.299*50 = 14.95, 0.587*100 = 58.7, 0.114*50 = 5.7 -> 79.35
    # use channel values giving x.5 exactly: 0.299*0 + 0.587*0 + 0.114*125 = 14.25
    # half-up case: (5, 0, 0) -> 1.495 -> 1; (0, 0, 500/114?) not integral.
    # 0.299*150 = 44.85, +0.587*0, +0.114*225 = 25.65 -> 70.5 exactly -> 71
    assert to_gray(np.array([[[150, 0, 225]]], dtype=np.uint8))[0, 0] == 71


def test_to_gray_range_and_shape(rng):
    img = rng.integers(0, 256, size=(13, 7, 3)).astype(np.uint8)
    g = to_gray(img)
    assert g.shape == (13, 7)
    assert g.dtype == np.uint8
    assert g.min() >= 0 and g.max() <= 255


def test_to_gray_rejects_gray_input():
    with pytest.raises(ValueError):
        to_gray(np.zeros((4, 4), dtype=np.uint8))


def test_read_p5_basic():
    data = b"P5 2 2 255 " + bytes([0, 64, 128, 255])
    img = read_pnm(data)
    assert img.shape == (2, 2)
    assert img.tolist() == [[0, 64], [128, 255]]


def test_read_p2_basic():
    img = read_pnm(b"P2 1 1 255 42")
    assert img.shape == (1, 1)
    assert img[0, 0] == 42


def test_read_p3_and_p6_color():
    p3 = read_pnm(b"P3 2 1 255  255 0 0  0 255 0")
    assert p3.shape == (1, 2, 3)
    assert p3[0, 0].tolist() == [255, 0, 0]
    p6 = read_pnm(b"P6 2 1 255 " + bytes([255, 0, 0, 0, 255, 0]))
    assert np.array_equal(p6, p3)


def test_read_skips_header_comments():
    data = b"P5\n# a comment\n2 1\n# another\n255\n" + bytes([7, 9])
    assert read_pnm(data).tolist() == [[7, 9]]


def test_write_p5_layout():
    img = np.array([[0]], dtype=np.uint8)
    assert write_pnm(img) == b"P5\n1 1\n255\n\x00"
    two = np.array([[0, 255]], dtype=np.uint8)
    assert write_pnm(two).endswith(bytes([0, 255]))


def test_round_trip_identity(rng):
    for _ in range(20):
        h, w = int(rng.integers(1, 40)), int(rng.integers(1, 40))
        img = rng.integers(0, 256, size=(h, w)).astype(np.uint8)
        back = read_pnm(write_pnm(img))
        assert np.array_equal(back, img)


def test_truncated_payload_names_offset():
    data = b"P5 2 2 255 " + bytes([1, 2, 3])
    with pytest.raises(PnmError, match=r"truncated payload at byte \d+"):
        read_pnm(data)


def test_bad_maxval_rejected():
    with pytest.raises(PnmError, match="maxval"):
        read_pnm(b"P5 1 1 65535 " + bytes([0, 0]))


def test_bad_magic_rejected():
    with pytest.raises(PnmError, match="magic"):
        read_pnm(b"P7 1 1 255 \x00")


def test_p2_truncated_and_out_of_range():
    with pytest.raises(PnmError, match="truncated"):
        read_pnm(b"P2 2 2 255 1 2 3")
    with pytest.raises(PnmError, match="out of range"):
        read_pnm(b"P2 1 1 255 300")


def test_write_rejects_bad_inputs():
    with pytest.raises(ValueError):
        write_pnm(np.zeros((2, 2, 3), dtype=np.uint8))
    with pytest.raises(ValueError):
        write_pnm(np.array([[1.5]]))
