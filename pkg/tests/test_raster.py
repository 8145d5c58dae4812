import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from edizoom.raster import (
    PixelSite,
    Raster,
    ShapeError,
    add,
    crop,
    new_raster,
    pad_to_multiple,
    subtract,
    to_luma,
)


@pytest.mark.parametrize("w,h,c", [(2, 2, 1), (1, 1, 3), (5, 3, 3)])
def test_new_raster_is_zero(w, h, c):
    r = new_raster(w, h, c)
    assert r.samples.shape == (w * h * c,)
    assert not r.samples.any()
    assert (r.width, r.height, r.channels) == (w, h, c)
    assert not r.signed


@pytest.mark.parametrize("w,h,c", [(0, 5, 1), (5, 0, 1), (2, 2, 2), (2, 2, 4)])
def test_new_raster_rejects_bad_dimensions(w, h, c):
    with pytest.raises(ShapeError):
        new_raster(w, h, c)


def test_signed_flag_recorded():
    assert new_raster(1, 1, signed=True).signed


def test_get_set_round_trip():
    r = new_raster(3, 2, 3)
    assert r.get((1, 1, 2)) == 0.0
    r.set((0, 0, 0), 0.5)
    assert r.get(PixelSite(0, 0, 0)) == 0.5
    r.set((2, 1, 2), 1.5)  # no clamping on set
    assert r.get((2, 1, 2)) == 1.5


@pytest.mark.parametrize("site", [(3, 0, 0), (0, 2, 0), (0, 0, 3), (-1, 0, 0)])
def test_get_out_of_bounds(site):
    r = new_raster(3, 2, 3)
    with pytest.raises(IndexError):
        r.get(site)
    with pytest.raises(IndexError):
        r.set(site, 1.0)


def test_samples_interleaved_row_major():
    r = new_raster(2, 2, 3)
    r.set((1, 0, 2), 7.0)
    assert r.samples[(0 * 2 + 1) * 3 + 2] == 7.0


def test_data_is_read_only():
    r = Raster(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        r.data[0, 0, 0] = 1.0


def test_subtract_and_add():
    a = Raster([[0.25]])
    b = Raster([[0.75]])
    d = subtract(a, b)
    assert d.signed and d.get((0, 0, 0)) == -0.5
    assert subtract(a, a).signed and not subtract(a, a).samples.any()
    assert add(a, new_raster(1, 1)) == a
    s = add(b, b)
    assert not s.signed and s.get((0, 0, 0)) == 1.5
    assert add(a, d).signed


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        add(new_raster(2, 2), new_raster(2, 3))
    with pytest.raises(ShapeError):
        subtract(new_raster(2, 2, 1), new_raster(2, 2, 3))


unit = st.floats(0, 1, allow_nan=False)


@given(arrays(np.float64, (4, 5, 3), elements=unit), arrays(np.float64, (4, 5, 3), elements=unit))
def test_add_undoes_subtract(x, y):
    a, b = Raster(x), Raster(y)
    back = add(subtract(a, b), b).data
    # exact only up to one rounding of the intermediate difference
    bound = np.spacing(np.maximum(np.abs(x), np.abs(y)))
    assert np.all(np.abs(back - x) <= bound)


def test_add_undoes_subtract_not_exact_in_general():
    a, b = Raster([[1e-20]]), Raster([[1.0]])
    assert add(subtract(a, b), b).get((0, 0, 0)) == 0.0


def test_luma_weights():
    r = Raster(np.ones((1, 1, 3)) * [1.0, 0.0, 0.0])
    assert to_luma(r)[0, 0] == pytest.approx(0.299)


def test_pad_and_crop():
    r = Raster(np.arange(6.0).reshape(2, 3))
    p = pad_to_multiple(r, 2)
    assert (p.width, p.height) == (4, 2)
    assert p.get((3, 1, 0)) == 5.0
    assert crop(p, 3, 2) == r
    assert pad_to_multiple(r, 1) is r
