"""Full-reference quality metrics and a Laplacian detail measure.

All metrics assume a peak value of 1.0.  SSIM uses an 8x8 uniform window at
stride 1 with population statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .raster import Raster, ShapeError, to_luma

SSIM_WINDOW = 8
SSIM_C1 = 0.01 ** 2
SSIM_C2 = 0.03 ** 2

LAPLACIAN = np.array([[0.0, 1.0, 0.0], [1.0, -4.0, 1.0], [0.0, 1.0, 0.0]])


def _planes(a, b=None):
    a = a.data if isinstance(a, Raster) else np.asarray(a, dtype=np.float64)
    if b is None:
        return a
    b = b.data if isinstance(b, Raster) else np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a, b


def mse(a, b) -> float:
    a, b = _planes(a, b)
    d = a - b
    return float(np.mean(d * d))


def psnr_from_mse(m: float) -> float:
    if m == 0:
        return math.inf
    return 10.0 * math.log10(1.0 / m)


def psnr(a, b) -> float:
    """PSNR in dB at unit peak; ``math.inf`` for identical inputs."""
    return psnr_from_mse(mse(a, b))


def _box_mean(x: np.ndarray, k: int) -> np.ndarray:
    # Mean over every k x k window (valid positions only) via a summed-area table.
    s = np.zeros((x.shape[0] + 1, x.shape[1] + 1))
    s[1:, 1:] = x.cumsum(0).cumsum(1)
    total = s[k:, k:] - s[:-k, k:] - s[k:, :-k] + s[:-k, :-k]
    return total / (k * k)


def ssim_plane(a: np.ndarray, b: np.ndarray, window: int = SSIM_WINDOW) -> float:
    """Mean SSIM of two 2-D arrays."""
    a, b = _planes(a, b)
    if a.ndim != 2:
        raise ShapeError("ssim_plane expects 2-D arrays")
    if a.shape[0] < window or a.shape[1] < window:
        raise ValueError(f"image {a.shape[1]}x{a.shape[0]} smaller than {window}x{window} SSIM window")
    # Centre the data first; the summed-area table loses precision otherwise.
    shift = 0.5 * (a.mean() + b.mean())
    a = a - shift
    b = b - shift
    mu_a = _box_mean(a, window)
    mu_b = _box_mean(b, window)
    var_a = np.maximum(_box_mean(a * a, window) - mu_a * mu_a, 0.0)
    var_b = np.maximum(_box_mean(b * b, window) - mu_b * mu_b, 0.0)
    cov = _box_mean(a * b, window) - mu_a * mu_b
    mu_a = mu_a + shift
    mu_b = mu_b + shift
    num = (2 * mu_a * mu_b + SSIM_C1) * (2 * cov + SSIM_C2)
    den = (mu_a * mu_a + mu_b * mu_b + SSIM_C1) * (var_a + var_b + SSIM_C2)
    return float(np.mean(num / den))


def ssim(a: Raster, b: Raster, window: int = SSIM_WINDOW) -> float:
    """SSIM on the luma plane (the only plane for grayscale input)."""
    _planes(a, b)
    return ssim_plane(to_luma(a), to_luma(b), window)


def laplacian_energy(plane: np.ndarray) -> float:
    """Mean squared 5-point Laplacian over interior pixels of a 2-D array."""
    p = np.asarray(plane, dtype=np.float64)
    if p.ndim != 2 or p.shape[0] < 3 or p.shape[1] < 3:
        raise ValueError("Laplacian energy needs a 2-D image of at least 3x3")
    lap = p[:-2, 1:-1] + p[2:, 1:-1] + p[1:-1, :-2] + p[1:-1, 2:] - 4.0 * p[1:-1, 1:-1]
    return float(np.mean(lap * lap))


def hf_energy(img: Raster) -> float:
    """High-frequency energy of the luma plane."""
    return laplacian_energy(to_luma(img))


@dataclass
class Scores:
    mse: float
    psnr: float
    ssim: float
    hf_energy: float

    def as_dict(self) -> dict:
        return {"mse": self.mse, "psnr": self.psnr, "ssim": self.ssim, "hf_energy": self.hf_energy}


@dataclass
class QualityReport:
    """Luma headline scores plus one :class:`Scores` per channel."""

    luma: Scores
    channels: list[Scores] = field(default_factory=list)

    @property
    def mse(self) -> float:
        return self.luma.mse

    @property
    def psnr(self) -> float:
        return self.luma.psnr

    @property
    def ssim(self) -> float:
        return self.luma.ssim

    @property
    def hf_energy(self) -> float:
        return self.luma.hf_energy

    @property
    def mean(self) -> Scores:
        """Channel-averaged scores (PSNR recomputed from the mean MSE)."""
        m = float(np.mean([c.mse for c in self.channels]))
        return Scores(
            m,
            psnr_from_mse(m),
            float(np.mean([c.ssim for c in self.channels])),
            float(np.mean([c.hf_energy for c in self.channels])),
        )


def _scores(test: np.ndarray, ref: np.ndarray) -> Scores:
    m = mse(test, ref)
    return Scores(m, psnr_from_mse(m), ssim_plane(test, ref), laplacian_energy(test))


def quality_report(test: Raster, reference: Raster) -> QualityReport:
    """Score ``test`` against ``reference``; ``hf_energy`` is that of ``test``."""
    _planes(test, reference)
    chans = [_scores(test.data[:, :, c], reference.data[:, :, c]) for c in range(test.channels)]
    if test.channels == 1:
        return QualityReport(chans[0], chans)
    return QualityReport(_scores(to_luma(test), to_luma(reference)), chans)


def delta(after: float, before: float) -> float:
    """``after - before`` with equal infinities treated as no change."""
    if after == before:
        return 0.0
    return after - before
