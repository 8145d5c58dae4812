"""Error diffusion image zooming (EDIZ).

The zoom kernel is first applied to a shrunken copy of the input to measure
what it fails to reconstruct.  That reconstruction error is then zoomed
alongside the input and added back as a detail estimate::

    i_zout = subsample(i_in, n)
    i_rec  = upsample(i_zout, n)
    e      = i_in - i_rec
    E_e    = upsample(e, n)
    i_out  = upsample(i_in, n) + gain * E_e

No stage clamps; the output may leave ``[0, 1]`` until it is saved.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels, resample
from .kernels import Kernel
from .raster import Raster, ShapeError, add, crop, pad_to_multiple, scale, subtract

STRICT = "strict"
PAD_REPLICATE = "pad-replicate"


@dataclass(frozen=True)
class EdizConfig:
    factor: int = 2
    kernel: Kernel = kernels.cubic()
    error_gain: float = 1.0
    divisibility: str = STRICT
    error_kernel: Kernel | None = None  # kernel for zooming e; defaults to ``kernel``

    def __post_init__(self):
        if int(self.factor) != self.factor or self.factor < 2:
            raise ValueError(f"zoom factor must be an integer >= 2, got {self.factor}")
        if not self.error_gain >= 0:
            raise ValueError(f"error gain must be >= 0, got {self.error_gain}")
        if self.divisibility not in (STRICT, PAD_REPLICATE):
            raise ValueError(f"unknown divisibility policy {self.divisibility!r}")

    @property
    def error_zoom_kernel(self) -> Kernel:
        return self.error_kernel or self.kernel


@dataclass(frozen=True)
class EdizTrace:
    """Every intermediate of one EDIZ run."""

    i_zout: Raster
    i_rec: Raster
    error: Raster
    estimated_error: Raster
    i_in_zoom: Raster
    i_out: Raster


def _prepare(img: Raster, cfg: EdizConfig) -> Raster:
    n = cfg.factor
    if cfg.divisibility == STRICT:
        for axis, size in (("width", img.width), ("height", img.height)):
            if size % n:
                raise ShapeError(f"image {axis} {size} is not divisible by zoom factor {n}")
        return img
    return pad_to_multiple(img, n)


def _reconstruction(img: Raster, cfg: EdizConfig) -> tuple[Raster, Raster, Raster]:
    i_zout = resample.subsample(img, cfg.factor)
    i_rec = resample.upsample(i_zout, cfg.factor, cfg.kernel)
    return i_zout, i_rec, subtract(img, i_rec)


def ediz_zoom(img: Raster, cfg: EdizConfig = EdizConfig()) -> EdizTrace:
    """Zoom ``img`` by ``cfg.factor`` with error-based detail estimation.

    Under the pad-replicate policy the input is padded on the right/bottom
    to a multiple of the factor; the intermediates keep the padded size and
    only ``i_in_zoom``, ``estimated_error`` and ``i_out`` are cropped back
    to ``(W*n) x (H*n)``.
    """
    n = cfg.factor
    work = _prepare(img, cfg)
    i_zout, i_rec, err = _reconstruction(work, cfg)
    est = resample.upsample(err, n, cfg.error_zoom_kernel)
    zoomed = resample.upsample(work, n, cfg.kernel)
    if work is not img:
        w, h = img.width * n, img.height * n
        est, zoomed = crop(est, w, h), crop(zoomed, w, h)
    i_out = add(zoomed, scale(est, cfg.error_gain))
    i_out = i_out.with_data(i_out.data, signed=img.signed)
    return EdizTrace(i_zout, i_rec, err, est, zoomed, i_out)


def reconstruction_error(img: Raster, cfg: EdizConfig = EdizConfig()) -> Raster:
    """Signed error ``img - upsample(subsample(img))`` at input resolution."""
    work = _prepare(img, cfg)
    err = _reconstruction(work, cfg)[2]
    if work is not img:
        err = crop(err, img.width, img.height)
    return err


def plain_zoom(img: Raster, cfg: EdizConfig = EdizConfig()) -> Raster:
    """Interpolation-only zoom with the same kernel and factor as ``cfg``."""
    return resample.upsample(img, cfg.factor, cfg.kernel)
