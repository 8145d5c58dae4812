"""Integer-factor separable upsampling and decimation.

Output sample ``j`` along an axis sits at source coordinate ``j / n``
(corner-aligned), so every ``n``-th output coincides with a source sample.
With an interpolating kernel those outputs reproduce the input exactly and
:func:`subsample` (offset-0 decimation) undoes :func:`upsample`.

Source indices that fall outside the image are clamped to the edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .kernels import Kernel
from .raster import Raster, ShapeError

REPLICATE = "replicate"


@dataclass(frozen=True)
class Phase:
    offsets: np.ndarray  # integer source offsets relative to floor(j / n)
    weights: np.ndarray


@dataclass(frozen=True)
class WeightTable:
    factor: int
    kernel: Kernel
    phases: tuple[Phase, ...]
    len_in: int

    @property
    def taps_per_phase(self) -> tuple[int, ...]:
        return tuple(len(p.offsets) for p in self.phases)

    @property
    def len_out(self) -> int:
        return self.len_in * self.factor

    def dense(self) -> tuple[np.ndarray, np.ndarray]:
        """Per-output ``(indices, weights)`` matrices, edge-clamped.

        Both have shape ``(len_out, max_taps)``; short phases are padded with
        zero-weight taps.
        """
        n = self.factor
        width = max(self.taps_per_phase)
        idx = np.zeros((n, width), dtype=np.intp)
        wts = np.zeros((n, width))
        for p, phase in enumerate(self.phases):
            k = len(phase.offsets)
            idx[p, :k] = phase.offsets
            wts[p, :k] = phase.weights
        j = np.arange(self.len_out)
        base = (j // n)[:, None]
        indices = np.clip(base + idx[j % n], 0, self.len_in - 1)
        return indices, wts[j % n]


def _check_factor(n) -> int:
    if int(n) != n or n < 2:
        raise ValueError(f"zoom factor must be an integer >= 2, got {n}")
    return int(n)


def _normalize(weights: np.ndarray) -> np.ndarray:
    return weights / weights.sum()


def build_weights(len_in: int, factor: int, kernel: Kernel) -> WeightTable:
    """Precompute the tap weights of each output phase.

    Phase ``p`` interpolates at fractional position ``p / n``; its taps are
    the integer offsets strictly inside the kernel support around that
    position.  Each phase is normalized to unit sum.
    """
    n = _check_factor(factor)
    if len_in < 1:
        raise ValueError(f"input length must be >= 1, got {len_in}")
    s = kernels.support(kernel)
    phases = []
    for p in range(n):
        frac = p / n
        lo = math.floor(frac - s) + 1
        hi = math.ceil(frac + s) - 1
        offsets = np.arange(lo, hi + 1)
        raw = np.asarray(kernels.evaluate(kernel, offsets - frac), dtype=np.float64)
        phases.append(Phase(offsets, _normalize(raw)))
    return WeightTable(n, kernel, tuple(phases), int(len_in))


def _resample_axis(data: np.ndarray, table: WeightTable, axis: int) -> np.ndarray:
    indices, weights = table.dense()
    shape = [1] * data.ndim
    shape[axis] = table.len_out
    out = np.zeros(data.shape[:axis] + (table.len_out,) + data.shape[axis + 1:])
    for t in range(indices.shape[1]):
        w = weights[:, t]
        if not w.any():
            continue
        out += np.take(data, indices[:, t], axis=axis) * w.reshape(shape)
    return out


def upsample(img: Raster, factor: int, kernel: Kernel, boundary: str = REPLICATE) -> Raster:
    """Zoom ``img`` by the integer ``factor`` in both directions.

    Rows are filtered first, then columns.  The signed flag carries over.
    """
    n = _check_factor(factor)
    if boundary != REPLICATE:
        raise ValueError(f"unsupported boundary policy {boundary!r}")
    horiz = build_weights(img.width, n, kernel)
    vert = build_weights(img.height, n, kernel)
    tmp = _resample_axis(img.data, horiz, axis=1)
    return img.with_data(_resample_axis(tmp, vert, axis=0))


def subsample(img: Raster, factor: int) -> Raster:
    """Keep every ``factor``-th sample in each direction, starting at 0."""
    n = _check_factor(factor)
    if img.width % n or img.height % n:
        raise ShapeError(
            f"{img.width}x{img.height} raster is not divisible by factor {n}"
        )
    return img.with_data(img.data[::n, ::n, :])
