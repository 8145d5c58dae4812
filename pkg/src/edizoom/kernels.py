"""1-D interpolation kernels: cubic convolution and Lanczos.

Both kernels are interpolating (1 at the origin, 0 at every other integer)
and even.  Evaluation is exact per call; tabulation happens in
:mod:`edizoom.resample`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

CUBIC = "cubic"
LANCZOS = "lanczos"

DEFAULT_CUBIC_A = -0.5
DEFAULT_LANCZOS_A = 3
LANCZOS_LOBES = (2, 3, 4)


@dataclass(frozen=True)
class Kernel:
    """Kernel descriptor.

    ``a`` is the free parameter of the cubic convolution family (must be
    negative) or the lobe count of the Lanczos window (2, 3 or 4).
    """

    kind: str
    a: float

    def __post_init__(self):
        if self.kind == CUBIC:
            if not self.a < 0:
                raise ValueError(f"cubic parameter must be negative, got {self.a}")
        elif self.kind == LANCZOS:
            if self.a not in LANCZOS_LOBES:
                raise ValueError(f"Lanczos lobe count must be one of {LANCZOS_LOBES}, got {self.a}")
            object.__setattr__(self, "a", int(self.a))
        else:
            raise ValueError(f"unknown kernel kind {self.kind!r}")

    @property
    def support(self) -> float:
        return support(self)

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def name(self) -> str:
        if self.kind == LANCZOS:
            return f"lanczos{self.a}"
        if self.a == DEFAULT_CUBIC_A:
            return "cubic"
        return f"cubic(a={self.a:g})"


def cubic(a: float = DEFAULT_CUBIC_A) -> Kernel:
    return Kernel(CUBIC, float(a))


def lanczos(a: int = DEFAULT_LANCZOS_A) -> Kernel:
    return Kernel(LANCZOS, a)


def from_name(name: str, cubic_a: float = DEFAULT_CUBIC_A) -> Kernel:
    """Parse ``"cubic"``, ``"lanczos"`` or ``"lanczos2|3|4"``."""
    name = name.strip().lower()
    if name in ("cubic", "bicubic"):
        return cubic(cubic_a)
    if name == "lanczos":
        return lanczos()
    if name.startswith("lanczos") and name[7:].isdigit():
        return lanczos(int(name[7:]))
    raise ValueError(f"unknown kernel {name!r}")


def support(kernel: Kernel) -> float:
    """Half-width beyond which the kernel is identically zero."""
    if kernel.kind == CUBIC:
        return 2.0
    return float(kernel.a)


def _cubic(x: np.ndarray, a: float) -> np.ndarray:
    ax = np.abs(x)
    ax2 = ax * ax
    ax3 = ax2 * ax
    inner = (a + 2.0) * ax3 - (a + 3.0) * ax2 + 1.0
    outer = a * ax3 - 5.0 * a * ax2 + 8.0 * a * ax - 4.0 * a
    return np.where(ax <= 1.0, inner, np.where(ax < 2.0, outer, 0.0))


def _sinc(x: np.ndarray) -> np.ndarray:
    px = math.pi * x
    safe = np.where(x == 0.0, 1.0, px)
    return np.where(x == 0.0, 1.0, np.sin(safe) / safe)


def _lanczos(x: np.ndarray, a: int) -> np.ndarray:
    ax = np.abs(x)
    w = _sinc(ax) * _sinc(ax / a)
    # sin(pi*k) is not exactly zero in floating point
    at_zero_crossing = (ax == np.round(ax)) & (ax != 0.0)
    return np.where((ax < a) & ~at_zero_crossing, w, 0.0)


def evaluate(kernel: Kernel, x):
    """Kernel weight at offset ``x`` (scalar or array, source-sample units)."""
    arr = np.asarray(x, dtype=np.float64)
    if kernel.kind == CUBIC:
        out = _cubic(arr, kernel.a)
    else:
        out = _lanczos(arr, kernel.a)
    return float(out) if out.ndim == 0 else out
