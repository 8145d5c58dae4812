"""Float image buffer shared by every stage of the zooming pipeline.

A :class:`Raster` wraps a ``(height, width, channels)`` float64 array.
Image rasters nominally hold values in ``[0, 1]``; *signed* rasters hold
error fields and carry no range restriction.  Nothing here clamps: values
outside ``[0, 1]`` survive until a file is written.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

SUPPORTED_CHANNELS = (1, 3)


class ShapeError(ValueError):
    """Raised when raster dimensions are invalid or do not conform."""


class PixelSite(NamedTuple):
    x: int
    y: int
    c: int = 0


class Raster:
    """Row-major, channel-interleaved float image.

    Parameters
    ----------
    samples : array_like
        Array of shape ``(height, width)`` or ``(height, width, channels)``.
        A 2-D array is treated as a single channel.  The data is copied.
    signed : bool
        Marks the raster as an error field (values may be negative).
    """

    __slots__ = ("_data", "_signed")

    def __init__(self, samples, signed: bool = False):
        data = np.array(samples, dtype=np.float64, copy=True)
        if data.ndim == 2:
            data = data[:, :, np.newaxis]
        if data.ndim != 3:
            raise ShapeError(f"expected a 2-D or 3-D array, got {data.ndim}-D")
        h, w, c = data.shape
        if h < 1 or w < 1:
            raise ShapeError(f"raster dimensions must be >= 1, got {w}x{h}")
        if c not in SUPPORTED_CHANNELS:
            raise ShapeError(f"unsupported channel count {c}")
        data.setflags(write=False)
        self._data = data
        self._signed = bool(signed)

    @classmethod
    def _wrap(cls, data: np.ndarray, signed: bool) -> "Raster":
        # Internal constructor for freshly computed arrays; skips the copy.
        obj = cls.__new__(cls)
        data = np.ascontiguousarray(data, dtype=np.float64)
        data.setflags(write=False)
        obj._data = data
        obj._signed = signed
        return obj

    @property
    def data(self) -> np.ndarray:
        """Read-only ``(height, width, channels)`` view of the samples."""
        return self._data

    @property
    def width(self) -> int:
        return self._data.shape[1]

    @property
    def height(self) -> int:
        return self._data.shape[0]

    @property
    def channels(self) -> int:
        return self._data.shape[2]

    @property
    def signed(self) -> bool:
        return self._signed

    @property
    def shape(self) -> tuple[int, int, int]:
        return self._data.shape

    @property
    def samples(self) -> np.ndarray:
        """Flat sample vector in row-major, channel-interleaved order."""
        return self._data.reshape(-1)

    def get(self, site) -> float:
        x, y, c = self._check_site(site)
        return float(self._data[y, x, c])

    def set(self, site, value: float) -> None:
        """Write one sample.

        Rasters are meant to be filled right after construction and then
        treated as read-only by library operations; this is the fill hook.
        """
        x, y, c = self._check_site(site)
        self._data.setflags(write=True)
        try:
            self._data[y, x, c] = value
        finally:
            self._data.setflags(write=False)

    def _check_site(self, site) -> PixelSite:
        site = PixelSite(*site)
        h, w, c = self._data.shape
        if not (0 <= site.x < w and 0 <= site.y < h and 0 <= site.c < c):
            raise IndexError(f"site {tuple(site)} outside {w}x{h}x{c} raster")
        return site

    def with_data(self, data: np.ndarray, signed: bool | None = None) -> "Raster":
        """New raster holding ``data`` with this raster's signed flag by default."""
        return Raster._wrap(data, self._signed if signed is None else signed)

    def __add__(self, other: "Raster") -> "Raster":
        return add(self, other)

    def __sub__(self, other: "Raster") -> "Raster":
        return subtract(self, other)

    def __mul__(self, k: float) -> "Raster":
        return scale(self, k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Raster):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    __hash__ = None

    def __repr__(self) -> str:
        kind = "signed " if self._signed else ""
        return f"<{kind}Raster {self.width}x{self.height}x{self.channels}>"


def new_raster(width: int, height: int, channels: int = 1, signed: bool = False) -> Raster:
    """Zero-filled raster."""
    if width < 1 or height < 1:
        raise ShapeError(f"raster dimensions must be >= 1, got {width}x{height}")
    if channels not in SUPPORTED_CHANNELS:
        raise ShapeError(f"unsupported channel count {channels}")
    r = Raster._wrap(np.zeros((height, width, channels)), signed)
    return r


def _check_conformable(a: Raster, b: Raster) -> None:
    if a.shape != b.shape:
        raise ShapeError(
            f"shape mismatch: {a.width}x{a.height}x{a.channels} vs "
            f"{b.width}x{b.height}x{b.channels}"
        )


def add(a: Raster, b: Raster) -> Raster:
    _check_conformable(a, b)
    return Raster._wrap(a.data + b.data, a.signed or b.signed)


def subtract(a: Raster, b: Raster) -> Raster:
    """Elementwise difference; the result is always signed."""
    _check_conformable(a, b)
    return Raster._wrap(a.data - b.data, True)


def scale(a: Raster, k: float) -> Raster:
    return Raster._wrap(a.data * k, a.signed)


def to_luma(a: Raster) -> np.ndarray:
    """2-D luma plane (Rec. 601 weights for RGB, the channel itself for gray)."""
    if a.channels == 1:
        return a.data[:, :, 0]
    d = a.data
    return 0.299 * d[:, :, 0] + 0.587 * d[:, :, 1] + 0.114 * d[:, :, 2]


def pad_to_multiple(a: Raster, n: int) -> Raster:
    """Extend right/bottom edges by replication up to the next multiple of ``n``."""
    ph = -a.height % n
    pw = -a.width % n
    if ph == 0 and pw == 0:
        return a
    return a.with_data(np.pad(a.data, ((0, ph), (0, pw), (0, 0)), mode="edge"))


def crop(a: Raster, width: int, height: int) -> Raster:
    """Top-left ``width`` x ``height`` region."""
    if width > a.width or height > a.height:
        raise ShapeError(f"cannot crop {a.width}x{a.height} to {width}x{height}")
    return a.with_data(a.data[:height, :width, :])
