"""Integer-factor image zooming with error diffusion detail estimation."""

from .ediz import EdizConfig, EdizTrace, ediz_zoom, plain_zoom, reconstruction_error
from .kernels import Kernel, cubic, lanczos
from .raster import PixelSite, Raster, ShapeError, new_raster
from .resample import build_weights, subsample, upsample

__version__ = "0.1.0"

__all__ = [
    "EdizConfig",
    "EdizTrace",
    "Kernel",
    "PixelSite",
    "Raster",
    "ShapeError",
    "build_weights",
    "cubic",
    "ediz_zoom",
    "lanczos",
    "new_raster",
    "plain_zoom",
    "reconstruction_error",
    "subsample",
    "upsample",
]
