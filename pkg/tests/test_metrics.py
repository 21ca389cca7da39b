import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import make_cover
from oracles import psnr_closed_form
from wmstego import Algorithm, RgbImage, embed, mse, psnr
from wmstego.errors import ShapeError


def _pair_512_one_off():
    a = np.zeros(512 * 512 * 3, dtype=np.uint8)
    b = a.copy()
    b[12345] = 1
    return RgbImage(512, 512, a), RgbImage(512, 512, b)


def test_identical():
    img = RgbImage(2, 2, np.arange(12))
    assert mse(img, img) == 0
    report = psnr(img, img)
    assert report.identical and report.mse == 0
    assert str(report) == "identical"


def test_single_byte_off_by_one():
    a, b = _pair_512_one_off()
    assert mse(a, b) == pytest.approx(1 / 786432, rel=1e-12)
    # 10*log10(65025*786432), evaluated independently
    expected = 10 * (math.log10(65025) + math.log10(786432))
    assert psnr(a, b).psnr_db == pytest.approx(expected, abs=1e-9)
    # frozen from a 30-digit mpmath evaluation of the same closed form
    assert psnr(a, b).psnr_db == pytest.approx(107.087415375, abs=1e-4)


def test_extreme_pixel():
    a = RgbImage(1, 1, [0, 0, 0])
    b = RgbImage(1, 1, [255, 255, 255])
    assert mse(a, b) == 65025
    assert psnr(a, b).psnr_db == pytest.approx(0.0, abs=1e-12)


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        mse(RgbImage(1, 2, [0] * 6), RgbImage(2, 1, [0] * 6))
    with pytest.raises(ShapeError):
        psnr(RgbImage(1, 1, [0] * 3), RgbImage(2, 1, [0] * 6))


@given(st.lists(st.integers(0, 255), min_size=12, max_size=12), st.lists(st.integers(0, 255), min_size=12, max_size=12))
def test_symmetry(x, y):
    a, b = RgbImage(2, 2, x), RgbImage(2, 2, y)
    assert mse(a, b) == mse(b, a)
    assert psnr(a, b) == psnr(b, a)


@given(st.lists(st.integers(0, 254), min_size=6, max_size=6), st.integers(0, 5))
def test_monotonic(x, idx):
    a = RgbImage(2, 1, x)
    y = list(x)
    y[idx] += 1
    b = RgbImage(2, 1, y)
    z = list(y)
    if z[idx] < 255:
        z[idx] += 1
        c = RgbImage(2, 1, z)
        assert mse(a, c) > mse(a, b)
        assert psnr(a, c).psnr_db < psnr(a, b).psnr_db


def test_exact_integer_accumulation():
    # a float32 running sum would drift here
    n = 1024 * 1024 * 3
    a = RgbImage(1024, 1024, np.zeros(n, dtype=np.uint8))
    b = RgbImage(1024, 1024, np.full(n, 255, dtype=np.uint8))
    assert mse(a, b) == 65025.0


@pytest.mark.parametrize("algo", list(Algorithm))
def test_flip_count_identity(rng, algo):
    cover = make_cover(rng, 40, 30, "random")
    result = embed(cover, bytes(range(200)), algo)
    report = psnr(cover, result.stego)
    assert report.mse == result.lsb_flips / cover.size
    assert report.psnr_db == pytest.approx(psnr_closed_form(cover.size, result.lsb_flips), rel=1e-9)
